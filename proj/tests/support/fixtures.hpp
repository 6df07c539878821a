#ifndef FIBCOMP_TESTS_FIXTURES_HPP
#define FIBCOMP_TESTS_FIXTURES_HPP

// Known forward-map rows for each bijection, as
// (map, n, origin, source, image).

#include <vector>

#include "fibcomp/bijections.hpp"

namespace fibcomp::fixtures {

struct Row {
    MapId map;
    std::uint32_t n;
    Origin origin;
    Composition source;
    Composition image;
};

inline std::vector<Row> rows()
{
    using O = Origin;
    const auto m1 = O::FromNMinus1;
    const auto m2 = O::FromNMinus2;
    return {
        // prop1, n = 5.
        {MapId::Prop1, 5, m2, {2, 1}, {2, 1, 2}},
        {MapId::Prop1, 5, m2, {1, 2}, {1, 2, 2}},
        {MapId::Prop1, 5, m2, {1, 1, 1}, {1, 1, 1, 2}},
        {MapId::Prop1, 5, m1, {2, 2}, {2, 2, 1}},
        {MapId::Prop1, 5, m1, {2, 1, 1}, {2, 1, 1, 1}},
        {MapId::Prop1, 5, m1, {1, 2, 1}, {1, 2, 1, 1}},
        {MapId::Prop1, 5, m1, {1, 1, 2}, {1, 1, 2, 1}},
        {MapId::Prop1, 5, m1, {1, 1, 1, 1}, {1, 1, 1, 1, 1}},
        // prop2, n = 6.
        {MapId::Prop2, 6, m2, {3, 1}, {3, 3}},
        {MapId::Prop2, 6, m2, {1, 3}, {1, 5}},
        {MapId::Prop2, 6, m2, {1, 1, 1, 1}, {1, 1, 1, 3}},
        {MapId::Prop2, 6, m1, {5}, {5, 1}},
        {MapId::Prop2, 6, m1, {3, 1, 1}, {3, 1, 1, 1}},
        {MapId::Prop2, 6, m1, {1, 3, 1}, {1, 3, 1, 1}},
        {MapId::Prop2, 6, m1, {1, 1, 3}, {1, 1, 3, 1}},
        {MapId::Prop2, 6, m1, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}},
        // prop3, n = 7.
        {MapId::Prop3, 7, m2, {5}, {5, 2}},
        {MapId::Prop3, 7, m2, {3, 2}, {3, 2, 2}},
        {MapId::Prop3, 7, m2, {2, 3}, {2, 3, 2}},
        {MapId::Prop3, 7, m1, {6}, {7}},
        {MapId::Prop3, 7, m1, {4, 2}, {4, 3}},
        {MapId::Prop3, 7, m1, {3, 3}, {3, 4}},
        {MapId::Prop3, 7, m1, {2, 4}, {2, 5}},
        {MapId::Prop3, 7, m1, {2, 2, 2}, {2, 2, 3}},
        // thm4, n = 5.
        {MapId::Thm4, 5, O::FromMin2, {5}, {1, 1, 1, 2}},
        {MapId::Thm4, 5, O::FromMin2, {3, 2}, {1, 2, 2}},
        {MapId::Thm4, 5, O::FromMin2, {2, 3}, {2, 1, 2}},
        {MapId::Thm4, 5, O::FromOdd, {5}, {2, 2, 1}},
        {MapId::Thm4, 5, O::FromOdd, {3, 1, 1}, {2, 1, 1, 1}},
        {MapId::Thm4, 5, O::FromOdd, {1, 3, 1}, {1, 2, 1, 1}},
        {MapId::Thm4, 5, O::FromOdd, {1, 1, 3}, {1, 1, 2, 1}},
        {MapId::Thm4, 5, O::FromOdd, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}},
    };
}

} // namespace fibcomp::fixtures

#endif // FIBCOMP_TESTS_FIXTURES_HPP
