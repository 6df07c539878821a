#ifndef FIBCOMP_BIJECTIONS_HPP
#define FIBCOMP_BIJECTIONS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fibcomp/codec.hpp"
#include "fibcomp/core.hpp"
#include "fibcomp/enumerate.hpp"
#include "fibcomp/text.hpp"

// Explicit bijections realizing the Fibonacci recurrence on composition
// classes:
//
//   prop1:  C12(n)  ~  C12(n-1)  u C12(n-2)      n >= 3
//   prop2:  Co(n)   ~  Co(n-1)   u Co(n-2)       n >= 3
//   prop3:  Cmin2(n)~  Cmin2(n-1)u Cmin2(n-2)    n >= 4
//   thm4:   C12(n)  ~  Cmin2(n)  u Co(n)         n >= 2
//
// The union on the right is disjoint by construction: each source carries an
// explicit origin tag, because Cmin2(n) and Co(n) can share members.

namespace fibcomp {

enum class Origin : std::uint8_t { FromNMinus1, FromNMinus2, FromMin2, FromOdd };

[[nodiscard]] constexpr const char* origin_name(Origin o) noexcept
{
    switch (o) {
    case Origin::FromNMinus1: return "from-n-minus-1";
    case Origin::FromNMinus2: return "from-n-minus-2";
    case Origin::FromMin2: return "from-min2";
    case Origin::FromOdd: return "from-odd";
    }
    return "?";
}

inline Origin parse_origin(std::string_view name)
{
    for (Origin o : {Origin::FromNMinus1, Origin::FromNMinus2, Origin::FromMin2, Origin::FromOdd})
        if (name == origin_name(o))
            return o;
    throw parse_error("unknown origin tag '" + std::string(name) +
                      "' (expected from-n-minus-1, from-n-minus-2, from-min2, from-odd)");
}

struct TaggedSource {
    Origin origin = Origin::FromNMinus1;
    Composition payload;

    friend bool operator==(const TaggedSource&, const TaggedSource&) = default;
    friend auto operator<=>(const TaggedSource&, const TaggedSource&) = default;
};

enum class MapId : std::uint8_t { Prop1, Prop2, Prop3, Thm4 };

inline constexpr MapId all_maps[] = {MapId::Prop1, MapId::Prop2, MapId::Prop3, MapId::Thm4};

[[nodiscard]] constexpr const char* map_name(MapId m) noexcept
{
    switch (m) {
    case MapId::Prop1: return "prop1";
    case MapId::Prop2: return "prop2";
    case MapId::Prop3: return "prop3";
    case MapId::Thm4: return "thm4";
    }
    return "?";
}

inline MapId parse_map(std::string_view name)
{
    for (MapId m : all_maps)
        if (name == map_name(m))
            return m;
    throw parse_error("unknown map '" + std::string(name) + "' (expected prop1, prop2, prop3, thm4)");
}

/// Smallest n for which the map's construction is defined.
[[nodiscard]] constexpr std::uint32_t min_n(MapId m) noexcept
{
    switch (m) {
    case MapId::Prop1:
    case MapId::Prop2: return 3;
    case MapId::Prop3: return 4;
    case MapId::Thm4: return 2;
    }
    return 0;
}

/// The class shared by source and target (props), or the target class (thm4).
[[nodiscard]] constexpr ClassTag target_class(MapId m) noexcept
{
    switch (m) {
    case MapId::Prop1: return ClassTag::Parts12;
    case MapId::Prop2: return ClassTag::Odd;
    case MapId::Prop3: return ClassTag::Min2;
    case MapId::Thm4: return ClassTag::Parts12;
    }
    return ClassTag::All;
}

/// One block of a disjoint-union domain: the class compositions of `total`
/// carrying the origin tag.
struct SourceBlock {
    Origin origin = Origin::FromNMinus1;
    ClassTag tag;
    std::uint32_t total;
};

/// The two blocks of the map's domain at n (n must be in range).
[[nodiscard]] inline std::vector<SourceBlock> domain_blocks(MapId m, std::uint32_t n)
{
    if (m == MapId::Thm4)
        return {{Origin::FromMin2, ClassTag::Min2, n}, {Origin::FromOdd, ClassTag::Odd, n}};
    ClassTag tag = target_class(m);
    return {{Origin::FromNMinus1, tag, n - 1}, {Origin::FromNMinus2, tag, n - 2}};
}

namespace detail {

inline void require_range(MapId m, std::uint32_t n)
{
    if (n < min_n(m))
        throw precondition_error(std::string(map_name(m)) + " requires n >= " + std::to_string(min_n(m)) +
                                 " (got n = " + std::to_string(n) + ")");
}

inline void require_member(const Composition& c, ClassTag tag, std::uint32_t total, std::string_view what)
{
    if (!belongs(tag, c) || c.total() != total)
        throw precondition_error(std::string(what) + ": " + to_text(c) + " is not in class " + class_name(tag) +
                                 " with total " + std::to_string(total));
}

/// Validates the payload against the block its origin names.
inline void require_source(MapId m, const TaggedSource& src, std::uint32_t n)
{
    require_range(m, n);
    for (const auto& block : domain_blocks(m, n))
        if (block.origin == src.origin) {
            require_member(src.payload, block.tag, block.total,
                           std::string(map_name(m)) + " source " + origin_name(src.origin));
            return;
        }
    throw precondition_error(std::string(map_name(m)) + " does not accept origin " + origin_name(src.origin));
}

inline Composition with_last(const Composition& c, Part last)
{
    auto parts = c.part_vector();
    parts.back() = last;
    return Composition(std::move(parts));
}

inline Composition appended(const Composition& c, Part last)
{
    auto parts = c.part_vector();
    parts.push_back(last);
    return Composition(std::move(parts));
}

inline Composition without_last(const Composition& c)
{
    auto parts = c.part_vector();
    parts.pop_back();
    return Composition(std::move(parts));
}

} // namespace detail

// prop1: append a domino (from n-2) or a square (from n-1).

[[nodiscard]] inline Composition prop1_forward(const TaggedSource& src, std::uint32_t n)
{
    detail::require_source(MapId::Prop1, src, n);
    return detail::appended(src.payload, src.origin == Origin::FromNMinus2 ? 2 : 1);
}

[[nodiscard]] inline TaggedSource prop1_backward(const Composition& c, std::uint32_t n)
{
    detail::require_range(MapId::Prop1, n);
    detail::require_member(c, ClassTag::Parts12, n, "prop1 target");
    return {c.back() == 2 ? Origin::FromNMinus2 : Origin::FromNMinus1, detail::without_last(c)};
}

// prop2: grow the last odd part by two (from n-2) or append a 1
// (from n-1).

[[nodiscard]] inline Composition prop2_forward(const TaggedSource& src, std::uint32_t n)
{
    detail::require_source(MapId::Prop2, src, n);
    if (src.origin == Origin::FromNMinus2)
        return detail::with_last(src.payload, src.payload.back() + 2);
    return detail::appended(src.payload, 1);
}

[[nodiscard]] inline TaggedSource prop2_backward(const Composition& c, std::uint32_t n)
{
    detail::require_range(MapId::Prop2, n);
    detail::require_member(c, ClassTag::Odd, n, "prop2 target");
    if (c.back() == 1)
        return {Origin::FromNMinus1, detail::without_last(c)};
    return {Origin::FromNMinus2, detail::with_last(c, c.back() - 2)};
}

// prop3: append a domino (from n-2) or lengthen the last tile by one
// (from n-1).

[[nodiscard]] inline Composition prop3_forward(const TaggedSource& src, std::uint32_t n)
{
    detail::require_source(MapId::Prop3, src, n);
    if (src.origin == Origin::FromNMinus2)
        return detail::appended(src.payload, 2);
    return detail::with_last(src.payload, src.payload.back() + 1);
}

[[nodiscard]] inline TaggedSource prop3_backward(const Composition& c, std::uint32_t n)
{
    detail::require_range(MapId::Prop3, n);
    detail::require_member(c, ClassTag::Min2, n, "prop3 target");
    if (c.back() == 2)
        return {Origin::FromNMinus2, detail::without_last(c)};
    return {Origin::FromNMinus1, detail::with_last(c, c.back() - 1)};
}

// thm4: a composition with parts >= 2 has no adjacent cuts, so its
// conjugate has parts <= 2 and starts and ends with 1; strip those two 1s and
// append a 2. An odd composition expands each part 2k+1 into k twos and a 1.

[[nodiscard]] inline Composition thm4_forward(const TaggedSource& src, std::uint32_t n)
{
    detail::require_source(MapId::Thm4, src, n);
    if (src.origin == Origin::FromMin2) {
        Composition conj = conjugate(src.payload);
        if (!belongs(ClassTag::Parts12, conj) || conj.size() < 2 || conj.front() != 1 || conj.back() != 1)
            throw invariant_violation("conjugate " + to_text(conj) + " of min2 composition " +
                                      to_text(src.payload) + " is not of the form (1, ..., 1) with parts <= 2");
        std::vector<Part> parts(conj.part_vector().begin() + 1, conj.part_vector().end() - 1);
        parts.push_back(2);
        return Composition(std::move(parts));
    }
    std::vector<Part> parts;
    for (Part odd : src.payload.parts()) {
        parts.insert(parts.end(), (odd - 1) / 2, Part{2});
        parts.push_back(1);
    }
    return Composition(std::move(parts));
}

[[nodiscard]] inline TaggedSource thm4_backward(const Composition& c, std::uint32_t n)
{
    detail::require_range(MapId::Thm4, n);
    detail::require_member(c, ClassTag::Parts12, n, "thm4 target");
    if (c.back() == 2) {
        std::vector<Part> parts;
        parts.reserve(c.size() + 1);
        parts.push_back(1);
        parts.insert(parts.end(), c.part_vector().begin(), c.part_vector().end() - 1);
        parts.push_back(1);
        return {Origin::FromMin2, conjugate(Composition(std::move(parts)))};
    }
    std::vector<Part> parts;
    Part twos = 0;
    for (Part p : c.parts()) {
        if (p == 2) {
            ++twos;
        } else {
            parts.push_back(2 * twos + 1);
            twos = 0;
        }
    }
    return {Origin::FromOdd, Composition(std::move(parts))};
}

[[nodiscard]] inline Composition forward(MapId m, const TaggedSource& src, std::uint32_t n)
{
    switch (m) {
    case MapId::Prop1: return prop1_forward(src, n);
    case MapId::Prop2: return prop2_forward(src, n);
    case MapId::Prop3: return prop3_forward(src, n);
    case MapId::Thm4: return thm4_forward(src, n);
    }
    throw invariant_violation("unknown map id");
}

[[nodiscard]] inline TaggedSource backward(MapId m, const Composition& c, std::uint32_t n)
{
    switch (m) {
    case MapId::Prop1: return prop1_backward(c, n);
    case MapId::Prop2: return prop2_backward(c, n);
    case MapId::Prop3: return prop3_backward(c, n);
    case MapId::Thm4: return thm4_backward(c, n);
    }
    throw invariant_violation("unknown map id");
}

/// Origin the image's last part implies: 2 vs 1 (prop1, thm4), 1 vs >= 3
/// (prop2), 2 vs >= 3 (prop3). Empty when the last part fits neither.
[[nodiscard]] inline std::optional<Origin> discriminate(MapId m, const Composition& image)
{
    if (image.empty())
        return std::nullopt;
    Part last = image.back();
    switch (m) {
    case MapId::Prop1:
        if (last == 2) return Origin::FromNMinus2;
        if (last == 1) return Origin::FromNMinus1;
        return std::nullopt;
    case MapId::Prop2:
        if (last == 1) return Origin::FromNMinus1;
        if (last >= 3) return Origin::FromNMinus2;
        return std::nullopt;
    case MapId::Prop3:
        if (last == 2) return Origin::FromNMinus2;
        if (last >= 3) return Origin::FromNMinus1;
        return std::nullopt;
    case MapId::Thm4:
        if (last == 2) return Origin::FromMin2;
        if (last == 1) return Origin::FromOdd;
        return std::nullopt;
    }
    return std::nullopt;
}

/// Outcome of an exhaustive bijection check at one n.
struct VerificationReport {
    std::string map;
    std::uint32_t n = 0;
    /// Per-block domain sizes, in block order.
    std::vector<std::uint64_t> block_sizes;
    std::uint64_t target_size = 0;
    bool passed = false;
    /// First counterexample; empty iff passed.
    std::string failure;

    [[nodiscard]] std::uint64_t domain_size() const
    {
        return std::accumulate(block_sizes.begin(), block_sizes.end(), std::uint64_t{0});
    }
};

struct VerifyOptions {
    /// Largest n whose domain and target are materialized.
    std::uint32_t materialize_bound = 20;
};

/// A forward/backward pair over a tagged disjoint-union domain, plus the
/// expected last-part discriminator.
struct BijectionUnderTest {
    std::string name;
    std::vector<SourceBlock> domain;
    ClassTag target;
    std::function<Composition(const TaggedSource&)> forward;
    std::function<TaggedSource(const Composition&)> backward;
    std::function<std::optional<Origin>(const Composition&)> discriminator;
};

/// Checks, by materializing both sides: images land in the target class with
/// total n; forward is injective; backward . forward = id on the domain;
/// forward . backward = id on the target; cardinalities agree; images of
/// different blocks are disjoint and the discriminator recovers each tag.
/// Any failure is reported with its counterexample.
[[nodiscard]] inline VerificationReport verify_bijection(const BijectionUnderTest& bij, std::uint32_t n,
                                                         const VerifyOptions& opts = {})
{
    if (n > opts.materialize_bound)
        throw precondition_error("n = " + std::to_string(n) + " exceeds the materialization bound " +
                                 std::to_string(opts.materialize_bound));

    VerificationReport report;
    report.map = bij.name;
    report.n = n;
    auto fail = [&](std::string what) {
        report.passed = false;
        report.failure = std::move(what);
        return report;
    };

    std::set<Composition> images;
    std::vector<std::set<Composition>> block_images(bij.domain.size());
    for (std::size_t b = 0; b < bij.domain.size(); ++b) {
        const auto& block = bij.domain[b];
        std::uint64_t size = 0;
        for (CompositionCursor cur(block.tag, block.total); !cur.done(); cur.advance(), ++size) {
            TaggedSource src{block.origin, cur.current()};
            const std::string src_text = std::string(origin_name(src.origin)) + " " + to_text(src.payload);
            Composition image;
            try {
                image = bij.forward(src);
            } catch (const std::exception& e) {
                return fail("forward(" + src_text + ") threw: " + e.what());
            }
            if (!belongs(bij.target, image) || image.total() != n)
                return fail("forward(" + src_text + ") = " + to_text(image) + " is not in " +
                            class_name(bij.target) + "(" + std::to_string(n) + ")");
            if (!images.insert(image).second)
                return fail("forward is not injective: " + to_text(image) + " has two preimages, one is " +
                            src_text);
            block_images[b].insert(image);
            if (bij.discriminator && bij.discriminator(image) != block.origin)
                return fail("last part of " + to_text(image) + " does not identify origin of " + src_text);
            TaggedSource back;
            try {
                back = bij.backward(image);
            } catch (const std::exception& e) {
                return fail("backward(" + to_text(image) + ") threw: " + e.what());
            }
            if (back != src)
                return fail("backward(forward(" + src_text + ")) = " + origin_name(back.origin) + " " +
                            to_text(back.payload));
        }
        report.block_sizes.push_back(size);
    }

    for (std::size_t a = 0; a < block_images.size(); ++a)
        for (std::size_t b = a + 1; b < block_images.size(); ++b)
            for (const auto& c : block_images[a])
                if (block_images[b].contains(c))
                    return fail("images of blocks " + std::to_string(a) + " and " + std::to_string(b) +
                                " overlap at " + to_text(c));

    for (CompositionCursor cur(bij.target, n); !cur.done(); cur.advance()) {
        Composition t = cur.current();
        ++report.target_size;
        if (!images.contains(t))
            return fail("forward is not surjective: " + to_text(t) + " has no preimage");
        TaggedSource src;
        try {
            src = bij.backward(t);
        } catch (const std::exception& e) {
            return fail("backward(" + to_text(t) + ") threw: " + e.what());
        }
        Composition again;
        try {
            again = bij.forward(src);
        } catch (const std::exception& e) {
            return fail("forward(backward(" + to_text(t) + ")) threw: " + e.what());
        }
        if (again != t)
            return fail("forward(backward(" + to_text(t) + ")) = " + to_text(again));
    }

    if (report.target_size != report.domain_size() || images.size() != report.target_size)
        return fail("cardinalities differ: domain " + std::to_string(report.domain_size()) + ", target " +
                    std::to_string(report.target_size));

    report.passed = true;
    return report;
}

/// The named map at n wrapped for verification.
[[nodiscard]] inline BijectionUnderTest bijection(MapId m, std::uint32_t n)
{
    detail::require_range(m, n);
    return {map_name(m),
            domain_blocks(m, n),
            target_class(m),
            [m, n](const TaggedSource& s) { return forward(m, s, n); },
            [m, n](const Composition& c) { return backward(m, c, n); },
            [m](const Composition& c) { return discriminate(m, c); }};
}

[[nodiscard]] inline VerificationReport verify_bijection(MapId m, std::uint32_t n, const VerifyOptions& opts = {})
{
    return verify_bijection(bijection(m, n), n, opts);
}

} // namespace fibcomp

#endif // FIBCOMP_BIJECTIONS_HPP
