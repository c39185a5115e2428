#include <gtest/gtest.h>

#include "tropz/enumeration.hpp"

using namespace tropz;

namespace {

TropicalCover cover(const Distribution& d, std::vector<Edge> edges, int g, Partition lam, Partition mu) {
    return make_cover(g, std::move(lam), std::move(mu), d, std::move(edges));
}

// (1,1) -> (2) at a single branch point
TropicalCover merge_point() { return cover(trivial_distribution(0, 1), {{kLeaf, 0, 1}, {kLeaf, 0, 1}, {0, kLeaf, 2}}, 0, {1, 1}, {2}); }

// 2 -> (1,1) -> 2: one cycle
TropicalCover one_cycle(int w = 1) {
    return cover(trivial_distribution(0, 2), {{kLeaf, 0, 2 * w}, {0, 1, w}, {0, 1, w}, {1, kLeaf, 2 * w}}, 1, {2 * w}, {2 * w});
}

// two cycles in a row
TropicalCover two_cycles() {
    return cover(trivial_distribution(0, 4),
                 {{kLeaf, 0, 2}, {0, 1, 1}, {0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {2, 3, 1}, {3, kLeaf, 2}}, 2, {2}, {2});
}

// (3) -> (1,1,1) over one pair: 3 -> 1 + 2, then 2 -> (1,1)
TropicalCover fork_pair() {
    return cover(trivial_distribution(1, 0), {{kLeaf, 0, 3}, {0, kLeaf, 1}, {0, 1, 2}, {1, kLeaf, 1}, {1, kLeaf, 1}}, 0, {3},
                 {1, 1, 1});
}

}  // namespace

TEST(Balancing, Examples) {
    EXPECT_TRUE(check_balancing(merge_point()));
    auto bad = cover(trivial_distribution(0, 1), {{kLeaf, 0, 1}, {kLeaf, 0, 2}, {0, kLeaf, 2}}, 0, {2, 1}, {2});
    EXPECT_FALSE(check_balancing(bad));
    auto bare = cover(Distribution{}, {{kLeaf, kLeaf, 1}}, 0, {1}, {1});
    EXPECT_TRUE(check_balancing(bare));
    EXPECT_EQ(validation_error(bare), "");
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus(merge_point()), 0);
    EXPECT_EQ(genus(one_cycle()), 1);
    EXPECT_EQ(genus(two_cycles()), 2);
    EXPECT_EQ(validation_error(two_cycles()), "");
}

TEST(Degree, Examples) {
    auto bare = cover(Distribution{}, {{kLeaf, kLeaf, 5}}, 0, {5}, {5});
    EXPECT_EQ(degree(bare), 5);
    for (const auto& c : enumerate_covers(0, {1, 1, 1}, {1, 1, 1}, trivial_distribution(0, 4))) EXPECT_EQ(degree(c), 3);
}

TEST(Validation, CatchesDefects) {
    auto c = one_cycle();
    c.g = 0;
    EXPECT_EQ(validation_error(c), "genus mismatch");
    auto d = merge_point();
    d.mu = {1, 1};
    EXPECT_EQ(validation_error(d), "outward ends do not form mu");
    auto e = cover(trivial_distribution(0, 2), {{kLeaf, 1, 2}, {1, 0, 1}, {1, 0, 1}, {0, kLeaf, 2}}, 1, {2}, {2});
    EXPECT_EQ(validation_error(e), "order does not extend orientation");
}

TEST(Symmetry, OutwardFork) {
    auto r = classify_symmetric(merge_point());
    ASSERT_EQ(r.sym.size(), 1u);
    EXPECT_EQ(r.sym[0].kind, SymKind::ForkIn);
    auto split = cover(trivial_distribution(0, 1), {{kLeaf, 0, 2}, {0, kLeaf, 1}, {0, kLeaf, 1}}, 0, {2}, {1, 1});
    auto rs = classify_symmetric(split);
    ASSERT_EQ(rs.sym.size(), 1u);
    EXPECT_EQ(rs.sym[0].kind, SymKind::ForkOut);
    EXPECT_EQ(rs.sym2.size(), 1u);
}

TEST(Symmetry, Cycle) {
    auto r = classify_symmetric(one_cycle(3));
    ASSERT_EQ(r.sym.size(), 1u);
    EXPECT_TRUE(r.sym[0].is_cycle());
    EXPECT_EQ(r.sym[0].weight, 3);
}

TEST(Symmetry, ForkNextToContractibleEdgeIsSym3) {
    auto covers = enumerate_covers(0, {3}, {1, 1, 1}, trivial_distribution(1, 0));
    ASSERT_EQ(covers.size(), 1u);
    auto r = classify_symmetric(covers[0]);
    ASSERT_EQ(r.sym.size(), 1u);
    EXPECT_EQ(r.sym[0].kind, SymKind::ForkOut);
    EXPECT_EQ(r.sym3.size(), 1u);
    EXPECT_TRUE(r.sym2.empty());
    EXPECT_EQ(r.contractible.size(), 1u);
    EXPECT_EQ(r.e_c_set.size(), 1u);
}

TEST(CanonicalKey, SwapInvariantAndWeightSensitive) {
    auto a = one_cycle(1);
    auto b = a;
    std::swap(b.edges[1], b.edges[2]);
    EXPECT_EQ(canonical_key(a), canonical_key(b));
    auto c = two_cycles();
    auto d = c;
    d.edges = {{kLeaf, 0, 4}, {0, 1, 2}, {0, 1, 2}, {1, 2, 4}, {2, 3, 2}, {2, 3, 2}, {3, kLeaf, 4}};
    EXPECT_NE(canonical_key(c), canonical_key(d));
    EXPECT_EQ(canonical_key(canonicalized(b)), canonical_key(a));
}

TEST(PairCatalog, Pictures) {
    EXPECT_EQ(kPairCatalog.size(), 14u);
    EXPECT_EQ(pair_picture(4).name, "iv");
    EXPECT_EQ(match_pair(fork_pair(), 0, 1).picture, 4);
    EXPECT_TRUE(is_resolving(fork_pair()));
    EXPECT_TRUE(is_resolving(merge_point()));
    EXPECT_EQ(classify_pair_weights(PairShape::Cycle, {3, 2, 1, 0}), 13);
    EXPECT_EQ(classify_pair_weights(PairShape::Cycle, {4, 2, 2, 0}), 14);
    EXPECT_EQ(classify_pair_weights(PairShape::Cycle, {4, 1, 3, 0}), 0);
    EXPECT_EQ(classify_pair_weights(PairShape::SplitMerge, {3, 1, 2, 1}), 12);
}

TEST(PairCatalog, DisjointPairIsNotResolving) {
    // pair vertices not joined by an edge
    auto c = cover(trivial_distribution(1, 0), {{kLeaf, 0, 1}, {kLeaf, 0, 1}, {0, kLeaf, 2}, {kLeaf, 1, 2}, {1, kLeaf, 1},
                                                {1, kLeaf, 1}},
                   0, {2, 1, 1}, {2, 1, 1});
    EXPECT_FALSE(is_resolving(c));
}
