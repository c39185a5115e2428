#include <gtest/gtest.h>

#include "tropz/constructions.hpp"
#include "tropz/zigzag.hpp"

using namespace tropz;

TEST(Zigzag, ForkPairCoverIsZigzag) {
    auto covers = enumerate_covers(0, {3}, {1, 1, 1}, trivial_distribution(1, 0));
    ASSERT_EQ(covers.size(), 1u);
    auto w = is_generalized_zigzag(covers[0]);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->odd);
    // the fork sits next to the contractible edge, so it stays in S rather than forming a tail
    EXPECT_TRUE(w->tails.empty());
    EXPECT_EQ(w->s_edges.size(), covers[0].edges.size());
}

TEST(Zigzag, FreeEvenInnerEdgeIsNotZigzag) {
    auto c = make_cover(1, {3}, {3}, trivial_distribution(0, 2), {{kLeaf, 0, 3}, {0, 1, 1}, {0, 1, 2}, {1, kLeaf, 3}});
    EXPECT_FALSE(is_generalized_zigzag(c).has_value());
}

TEST(Zigzag, EvenEdgeBetweenTwoSVerticesIsRejected) {
    auto c = make_cover(1, {2, 1}, {3}, trivial_distribution(0, 3),
                        {{kLeaf, 0, 2}, {0, 1, 1}, {0, 2, 1}, {kLeaf, 1, 1}, {1, 2, 2}, {2, kLeaf, 3}});
    ASSERT_EQ(validation_error(c), "");
    EXPECT_FALSE(is_generalized_zigzag(c).has_value());
}

TEST(Zigzag, OddEndTailIsAccepted) {
    // inward 2-end splitting into the (1,1) cycle, then an all-odd rest is a tail of type 2o-end
    auto c = make_cover(1, {2, 1}, {3}, trivial_distribution(0, 3),
                        {{kLeaf, 0, 2}, {0, 1, 1}, {0, 1, 1}, {1, 2, 2}, {kLeaf, 2, 1}, {2, kLeaf, 3}});
    ASSERT_EQ(validation_error(c), "");
    auto w = is_generalized_zigzag(c);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->tails.size(), 1u);
    EXPECT_EQ(w->tails[0].type, TailType::OddEnd);
    EXPECT_TRUE(w->tails[0].inward);
    EXPECT_EQ(w->tails[0].cycles, 1);
}

TEST(Zigzag, PermutationFamilyMembersAreZigzag) {
    for (int m : {4, 7})
        for (const auto& c : build_permutation_family(m)) {
            auto w = is_generalized_zigzag(c);
            ASSERT_TRUE(w.has_value()) << c.label;
            EXPECT_EQ(validation_error(c), "");
        }
}

TEST(ZigzagNumber, Examples) {
    EXPECT_EQ(zigzag_number(0, {3}, {1, 1, 1}, {Ram::Triple}), 1);
    EXPECT_GE(zigzag_number(0, ones(4), ones(4), triple_first(3, 0)), 1);
    EXPECT_THROW(zigzag_number(0, {2}, {1, 1}, {Ram::Simple}), DomainError);
    EXPECT_THROW(zigzag_number(0, {4}, {2, 2}, {Ram::Simple, Ram::Simple}), DomainError);
}

TEST(ZigzagNumber, OddCoversHaveOddMultiplicity) {
    auto covers = enumerate_covers(0, ones(4), ones(4), distribution_from_order(parse_ram_string("3232")));
    for (const auto& c : covers) {
        auto w = is_generalized_zigzag(c);
        if (!w) continue;
        auto r = classify_symmetric(c);
        bool found = false;
        for (const auto& s : colouring_summary(c, r, {}))
            if (s.effective > 0 && denominator(s.mult) == 1 && numerator(s.mult) % 2 == (w->odd ? 1 : 0)) found = true;
        EXPECT_TRUE(found) << canonical_key(c);
    }
}

TEST(ZigzagNumber, EvenForkTailOption) {
    // (3,1) -> (2,2): the only zigzag covers use an (e,e) fork tail
    auto covers = enumerate_covers(0, {3, 1}, {2, 2}, trivial_distribution(0, 2));
    EXPECT_GE(zigzag_number_of(covers, true), zigzag_number_of(covers, false));
}

TEST(ProperlyMixed, DegenerateArrangements) {
    EXPECT_EQ(proper_zigzag_number(0, {3}, {1, 1, 1}, 1, 0), 0);
    EXPECT_EQ(proper_zigzag_number(0, {1, 1, 1}, {1, 1, 1}, 0, 4), 0);
    for (const auto& c : enumerate_covers(0, {1, 1, 1}, {1, 1, 1}, trivial_distribution(0, 4)))
        EXPECT_FALSE(is_properly_mixed(c).has_value());
}

TEST(ProperlyMixed, NeedsRepeatedOddPartAboveOne) {
    // without two equal odd inward ends of weight >= 3 there is no picture (xii) start
    for (const auto& c : enumerate_covers(0, ones(4), ones(4), trivial_distribution(1, 4)))
        EXPECT_FALSE(is_properly_mixed(c).has_value());
}

TEST(ProperlyMixed, SmallestInstance) {
    auto covers = properly_mixed_covers(0, {3, 3, 1}, {6, 1}, 1, 1);
    ASSERT_EQ(covers.size(), 1u);
    for (const auto& c : covers) {
        auto w = is_properly_mixed(c);
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(c.edges[w->characteristic_edge].weight % 2, 1);
        EXPECT_EQ(w->v2, c.nv - 1);
    }
    EXPECT_LE(BigInt(covers.size()), zigzag_number(0, {3, 3, 1}, {6, 1}, parse_ram_string("32")));
}
