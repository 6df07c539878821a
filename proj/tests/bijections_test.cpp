#include <gtest/gtest.h>

#include "fibcomp/bijections.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace fibcomp;

namespace {

const Origin m1 = Origin::FromNMinus1;
const Origin m2 = Origin::FromNMinus2;

} // namespace

TEST(Fixtures, EveryRowMapsForwardAndBack)
{
    for (const auto& row : fixtures::rows()) {
        TaggedSource src{row.origin, row.source};
        EXPECT_EQ(forward(row.map, src, row.n), row.image) << map_name(row.map) << " " << to_text(row.source);
        EXPECT_EQ(backward(row.map, row.image, row.n), src) << map_name(row.map) << " " << to_text(row.image);
    }
}

TEST(Prop1, Examples)
{
    EXPECT_EQ(prop1_forward({m2, {2, 1}}, 5), (Composition{2, 1, 2}));
    EXPECT_EQ(prop1_forward({m1, {2, 2}}, 5), (Composition{2, 2, 1}));
    EXPECT_EQ(prop1_backward({1, 1, 1, 1, 1}, 5), (TaggedSource{m1, {1, 1, 1, 1}}));
    EXPECT_EQ(prop1_backward({1, 2}, 3), (TaggedSource{m2, {1}}));
}

TEST(Prop1, Errors)
{
    EXPECT_THROW((void)prop1_forward({m1, {1}}, 2), precondition_error);
    EXPECT_THROW((void)prop1_forward({m1, {3}}, 4), precondition_error);       // wrong class
    EXPECT_THROW((void)prop1_forward({m1, {1, 1}}, 5), precondition_error);    // wrong total
    EXPECT_THROW((void)prop1_forward({Origin::FromOdd, {1, 1}}, 4), precondition_error);
    EXPECT_THROW((void)prop1_backward({3, 2}, 5), precondition_error);
    EXPECT_THROW((void)prop1_backward({1, 2}, 4), precondition_error);
}

TEST(Prop2, Examples)
{
    EXPECT_EQ(prop2_forward({m2, {3, 1}}, 6), (Composition{3, 3}));
    EXPECT_EQ(prop2_forward({m1, {5}}, 6), (Composition{5, 1}));
    EXPECT_EQ(prop2_forward({m2, {1, 1, 1, 1}}, 6), (Composition{1, 1, 1, 3}));
    EXPECT_EQ(prop2_backward({5, 1}, 6), (TaggedSource{m1, {5}}));
    EXPECT_EQ(prop2_backward({3, 3}, 6), (TaggedSource{m2, {3, 1}}));
    EXPECT_EQ(prop2_backward({3}, 3), (TaggedSource{m2, {1}}));
}

TEST(Prop2, Errors)
{
    EXPECT_THROW((void)prop2_forward({m1, {1}}, 2), precondition_error);
    EXPECT_THROW((void)prop2_forward({m2, {2}}, 4), precondition_error);
    EXPECT_THROW((void)prop2_backward({2, 2}, 4), precondition_error);
}

TEST(Prop3, Examples)
{
    EXPECT_EQ(prop3_forward({m2, {5}}, 7), (Composition{5, 2}));
    EXPECT_EQ(prop3_forward({m1, {6}}, 7), (Composition{7}));
    EXPECT_EQ(prop3_forward({m1, {2, 2, 2}}, 7), (Composition{2, 2, 3}));
    EXPECT_EQ(prop3_backward({5, 2}, 7), (TaggedSource{m2, {5}}));
    EXPECT_EQ(prop3_backward({7}, 7), (TaggedSource{m1, {6}}));
    EXPECT_EQ(prop3_backward({2, 2}, 4), (TaggedSource{m2, {2}}));
}

TEST(Prop3, Errors)
{
    EXPECT_THROW((void)prop3_forward({m1, {2}}, 3), precondition_error);
    EXPECT_THROW((void)prop3_backward({3}, 3), precondition_error);
    EXPECT_THROW((void)prop3_forward({m1, {1, 4}}, 6), precondition_error);
    EXPECT_THROW((void)prop3_backward({1, 3}, 4), precondition_error);
}

TEST(Thm4, Examples)
{
    EXPECT_EQ(thm4_forward({Origin::FromMin2, {3, 2}}, 5), (Composition{1, 2, 2}));
    EXPECT_EQ(thm4_forward({Origin::FromMin2, {5}}, 5), (Composition{1, 1, 1, 2}));
    EXPECT_EQ(thm4_forward({Origin::FromOdd, {3, 1, 1}}, 5), (Composition{2, 1, 1, 1}));
    EXPECT_EQ(thm4_forward({Origin::FromOdd, {1, 1, 1, 1, 1}}, 5), (Composition{1, 1, 1, 1, 1}));
    EXPECT_EQ(thm4_backward({2, 1, 2}, 5), (TaggedSource{Origin::FromMin2, {2, 3}}));
    EXPECT_EQ(thm4_backward({1, 1, 2, 1}, 5), (TaggedSource{Origin::FromOdd, {1, 1, 3}}));
}

// The conjugate of (2) is (1,1); stripping both ends leaves the empty
// composition, and appending a 2 gives (2) back.
TEST(Thm4, SmallestBoard)
{
    EXPECT_EQ(thm4_backward({2}, 2), (TaggedSource{Origin::FromMin2, {2}}));
    EXPECT_EQ(thm4_forward({Origin::FromMin2, {2}}, 2), (Composition{2}));
    EXPECT_EQ(thm4_forward({Origin::FromOdd, {1, 1}}, 2), (Composition{1, 1}));
}

TEST(Thm4, Errors)
{
    EXPECT_THROW((void)thm4_forward({Origin::FromOdd, {1}}, 1), precondition_error);
    EXPECT_THROW((void)thm4_forward({Origin::FromOdd, {2, 3}}, 5), precondition_error);
    EXPECT_THROW((void)thm4_forward({Origin::FromMin2, {1, 4}}, 5), precondition_error);
    EXPECT_THROW((void)thm4_forward({m1, {1, 4}}, 5), precondition_error);
    EXPECT_THROW((void)thm4_backward({3, 2}, 5), precondition_error);
}

TEST(Thm4, SharedSourceHasDistinctImages)
{
    Composition five{5};
    EXPECT_NE(thm4_forward({Origin::FromMin2, five}, 5), thm4_forward({Origin::FromOdd, five}, 5));
}

TEST(VerifyBijection, SmallCases)
{
    auto p1 = verify_bijection(MapId::Prop1, 5);
    EXPECT_TRUE(p1.passed) << p1.failure;
    EXPECT_EQ(p1.target_size, 8u);
    EXPECT_EQ(p1.block_sizes, (std::vector<std::uint64_t>{5, 3}));

    auto t4 = verify_bijection(MapId::Thm4, 5);
    EXPECT_TRUE(t4.passed) << t4.failure;
    EXPECT_EQ(t4.target_size, 8u);
    EXPECT_EQ(t4.block_sizes, (std::vector<std::uint64_t>{3, 5}));

    auto p2 = verify_bijection(MapId::Prop2, 3);
    EXPECT_TRUE(p2.passed) << p2.failure;
    EXPECT_EQ(p2.target_size, 2u);
    EXPECT_EQ(p2.block_sizes, (std::vector<std::uint64_t>{1, 1}));
}

TEST(VerifyBijection, RangeAndBound)
{
    EXPECT_THROW((void)verify_bijection(MapId::Prop3, 3), precondition_error);
    EXPECT_THROW((void)verify_bijection(MapId::Thm4, 1), precondition_error);
    EXPECT_THROW((void)verify_bijection(MapId::Thm4, 21), precondition_error);
    EXPECT_TRUE(verify_bijection(MapId::Thm4, 21, VerifyOptions{21}).passed);
}

TEST(VerifyBijection, AllMapsPassExhaustivelyTo18WithFibonacciSizes)
{
    for (MapId m : all_maps)
        for (std::uint32_t n = min_n(m); n <= 18; ++n) {
            auto r = verify_bijection(m, n);
            ASSERT_TRUE(r.passed) << map_name(m) << " " << n << ": " << r.failure;
            ASSERT_EQ(r.block_sizes.size(), 2u);
            ASSERT_EQ(r.target_size, r.block_sizes[0] + r.block_sizes[1]);
        }
}

TEST(VerifyBijection, Thm4ImagesSplitByLastPart)
{
    for (std::uint32_t n = 2; n <= 16; ++n) {
        for (const auto& parts : oracle::generate(oracle::Rule::Min2, n))
            ASSERT_EQ(thm4_forward({Origin::FromMin2, Composition(parts)}, n).back(), 2u);
        for (const auto& parts : oracle::generate(oracle::Rule::Odd, n))
            ASSERT_EQ(thm4_forward({Origin::FromOdd, Composition(parts)}, n).back(), 1u);
    }
}

// A broken map must yield a failing report carrying a counterexample.
TEST(VerifyBijection, ReportsCounterexamples)
{
    const std::uint32_t n = 6;

    auto not_injective = bijection(MapId::Prop1, n);
    not_injective.forward = [n](const TaggedSource& s) {
        return prop1_forward({Origin::FromNMinus1, s.origin == Origin::FromNMinus2 ? Composition{1, 1, 1, 1, 1}
                                                                                   : s.payload},
                             n);
    };
    auto r1 = verify_bijection(not_injective, n);
    EXPECT_FALSE(r1.passed);
    EXPECT_FALSE(r1.failure.empty());

    auto wrong_inverse = bijection(MapId::Prop2, n);
    wrong_inverse.backward = [n](const Composition& c) {
        auto s = prop2_backward(c, n);
        if (s.payload == Composition{5})
            s.payload = Composition{1, 3, 1};
        return s;
    };
    auto r2 = verify_bijection(wrong_inverse, n);
    EXPECT_FALSE(r2.passed);
    EXPECT_NE(r2.failure.find("backward"), std::string::npos) << r2.failure;

    auto escapes_target = bijection(MapId::Prop3, n);
    escapes_target.forward = [](const TaggedSource& s) {
        auto parts = s.payload.part_vector();
        parts.push_back(1);
        return Composition(parts);
    };
    auto r3 = verify_bijection(escapes_target, n);
    EXPECT_FALSE(r3.passed);
    EXPECT_NE(r3.failure.find("not in"), std::string::npos) << r3.failure;

    auto mislabelled = bijection(MapId::Thm4, n);
    mislabelled.discriminator = [](const Composition&) { return std::optional<Origin>(Origin::FromOdd); };
    auto r4 = verify_bijection(mislabelled, n);
    EXPECT_FALSE(r4.passed);
    EXPECT_NE(r4.failure.find("origin"), std::string::npos) << r4.failure;

    auto throws = bijection(MapId::Thm4, n);
    throws.forward = [](const TaggedSource&) -> Composition { throw invariant_violation("boom"); };
    auto r5 = verify_bijection(throws, n);
    EXPECT_FALSE(r5.passed);
    EXPECT_NE(r5.failure.find("boom"), std::string::npos);
}

TEST(VerifyBijection, SurjectivityFailureIsCaught)
{
    // Domain shrunk to one block: images stay consistent but miss the target.
    auto partial = bijection(MapId::Prop1, 6);
    partial.domain.pop_back();
    auto r = verify_bijection(partial, 6);
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.failure.find("surjective"), std::string::npos) << r.failure;
}

TEST(Discriminate, LastPartRules)
{
    EXPECT_EQ(discriminate(MapId::Prop1, {1, 2}), m2);
    EXPECT_EQ(discriminate(MapId::Prop1, {2, 1}), m1);
    EXPECT_EQ(discriminate(MapId::Prop2, {1, 3}), m2);
    EXPECT_EQ(discriminate(MapId::Prop2, {3, 1}), m1);
    EXPECT_EQ(discriminate(MapId::Prop3, {3, 2}), m2);
    EXPECT_EQ(discriminate(MapId::Prop3, {2, 3}), m1);
    EXPECT_EQ(discriminate(MapId::Thm4, {1, 2}), Origin::FromMin2);
    EXPECT_EQ(discriminate(MapId::Thm4, {2, 1}), Origin::FromOdd);
    EXPECT_FALSE(discriminate(MapId::Prop1, {3}).has_value());
    EXPECT_FALSE(discriminate(MapId::Prop1, {}).has_value());
}

TEST(Names, RoundTrip)
{
    for (MapId m : all_maps)
        EXPECT_EQ(parse_map(map_name(m)), m);
    for (Origin o : {m1, m2, Origin::FromMin2, Origin::FromOdd})
        EXPECT_EQ(parse_origin(origin_name(o)), o);
    EXPECT_THROW((void)parse_map("prop4"), parse_error);
    EXPECT_THROW((void)parse_origin("from-even"), parse_error);
}
