#ifndef FIBCOMP_FIBCOMP_HPP
#define FIBCOMP_FIBCOMP_HPP

#include "fibcomp/bijections.hpp"
#include "fibcomp/codec.hpp"
#include "fibcomp/core.hpp"
#include "fibcomp/enumerate.hpp"
#include "fibcomp/identities.hpp"
#include "fibcomp/render.hpp"
#include "fibcomp/text.hpp"

#endif // FIBCOMP_FIBCOMP_HPP
