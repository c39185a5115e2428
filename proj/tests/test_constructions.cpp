#include <gtest/gtest.h>

#include <set>

#include "tropz/asymptotics.hpp"
#include "tropz/constructions.hpp"

using namespace tropz;

namespace {

std::set<CanonicalKey> keys(const std::vector<TropicalCover>& v) {
    std::set<CanonicalKey> out;
    for (const auto& c : v) out.insert(canonical_key(c));
    return out;
}

void expect_valid_zigzag(const TropicalCover& c) {
    EXPECT_EQ(validation_error(c), "") << c.label;
    EXPECT_TRUE(is_resolving(c)) << c.label;
    EXPECT_TRUE(is_generalized_zigzag(c).has_value()) << c.label;
}

TropicalCover fork_pair() { return enumerate_covers(0, {3}, {1, 1, 1}, trivial_distribution(1, 0)).at(0); }

}  // namespace

TEST(Glue, DegreeAdds) {
    auto left = fork_pair();
    auto right = reversed(left);
    expect_valid_zigzag(right);
    auto c = glue_first(left, right, 1);
    expect_valid_zigzag(c);
    EXPECT_EQ(degree(c), 5);
    EXPECT_EQ(c.lambda, Partition({3, 1, 1}));
    EXPECT_EQ(c.mu, Partition({3, 1, 1}));
    EXPECT_EQ(c.g, 0);
}

TEST(Glue, RejectsSymmetricForkEnd) {
    auto left = fork_pair();
    auto right = reversed(left);
    auto r = classify_symmetric(left);
    ASSERT_EQ(r.sym.size(), 1u);
    int fork_end = r.sym[0].e1;
    int in_end = gluable_ends(right, true, 1).at(0);
    EXPECT_THROW(glue({left, fork_end, right, in_end}), DomainError);
    EXPECT_THROW(glue({left, fork_end, right, 0}), DomainError);
    EXPECT_THROW(glue_first(left, right, 3), DomainError);
}

TEST(Glue, CountsMultiply) {
    auto left = build_permutation_family(7);
    auto right = build_asymp2_family(2, 1);
    ASSERT_EQ(left.size(), 2u);
    ASSERT_GE(right.size(), 3u);
    right.resize(3);
    std::vector<TropicalCover> glued;
    for (const auto& a : left)
        for (const auto& b : right) {
            glued.push_back(glue_first(a, b, 1));
            expect_valid_zigzag(glued.back());
            EXPECT_EQ(degree(glued.back()), degree(a) + degree(b) - 1);
        }
    EXPECT_EQ(keys(glued).size(), 6u);
}

TEST(Nonvanishing, BalancedCase) {
    Partition lam{5, 3, 3, 1};
    ASSERT_TRUE(nonvanishing_hypotheses(lam, lam).ok);
    auto c = build_nonvanishing_cover(0, lam, lam);
    expect_valid_zigzag(c);
    EXPECT_EQ(c.label, "nonvanishing:a=0");
    EXPECT_EQ(c.dist.t(), 0);
    auto c2 = build_nonvanishing_cover(2, lam, lam);
    expect_valid_zigzag(c2);
    EXPECT_EQ(genus(c2), 2);
    EXPECT_EQ(c2.dist.s(), c.dist.s() + 2);
}

TEST(Nonvanishing, UnbalancedCases) {
    Partition lam{7, 5, 3, 3, 3, 3, 1}, mu{13, 3, 3, 3, 3};
    auto a = build_nonvanishing_cover(1, lam, mu);
    expect_valid_zigzag(a);
    EXPECT_EQ(a.label, "nonvanishing:a>0");
    auto b = build_nonvanishing_cover(1, mu, lam);
    expect_valid_zigzag(b);
    EXPECT_EQ(b.label, "nonvanishing:a<0");
    EXPECT_EQ(b.lambda, mu);
    EXPECT_EQ(b.mu, lam);
}

TEST(Nonvanishing, HypothesesEnforced) {
    EXPECT_THROW(build_nonvanishing_cover(0, {4, 3, 1}, {5, 3}), DomainError);
    EXPECT_FALSE(nonvanishing_hypotheses({4, 3, 1}, {5, 3}).ok);
    EXPECT_FALSE(nonvanishing_hypotheses({5}, {3, 1, 1}).ok);
    EXPECT_THROW(build_nonvanishing_cover(-1, {5, 3, 3, 1}, {5, 3, 3, 1}), DomainError);
}

TEST(PermutationFamily, Counts) {
    const std::pair<int, std::size_t> expect[] = {{4, 1}, {5, 1}, {6, 1}, {7, 2}, {10, 6}};
    for (auto [m, n] : expect) {
        auto fam = build_permutation_family(m);
        EXPECT_EQ(fam.size(), n) << m;
        EXPECT_EQ(keys(fam).size(), n) << m;
        EXPECT_EQ(BigInt(n), factorial(family_block_count(m)));
        for (const auto& c : fam) {
            expect_valid_zigzag(c);
            EXPECT_EQ(c.lambda, ones(m));
            EXPECT_EQ(c.dist.s(), m - 1);
            EXPECT_EQ(c.dist.t(), 0);
        }
    }
}

TEST(PermutationFamily, InsideEnumeratedClasses) {
    auto fam = build_permutation_family(7);
    auto all = enumerate_covers(0, ones(7), ones(7), trivial_distribution(6, 0));
    auto k = keys(all);
    for (const auto& c : fam) EXPECT_TRUE(k.count(canonical_key(c))) << c.label;
}

TEST(Asymp2Cover, Shapes) {
    auto c = build_asymp2_cover(1, 1, default_cycle_assignment(1, 1), {});
    expect_valid_zigzag(c);
    EXPECT_EQ(degree(c), 3);
    auto w = is_generalized_zigzag(c);
    int cycles = 0;
    for (const auto& t : w->tails) cycles += t.cycles;
    EXPECT_EQ(cycles, 1);
    EXPECT_EQ(default_cycle_assignment(2, 1), (std::vector<int>{1, 0}));
    EXPECT_EQ(default_cycle_assignment(3, 7), (std::vector<int>{3, 2, 2}));
    auto d = build_asymp2_cover(2, 1, default_cycle_assignment(2, 1), {});
    expect_valid_zigzag(d);
    EXPECT_EQ(degree(d), 5);
    EXPECT_EQ(d.g, 1);
}

TEST(Asymp2Family, MeetsBound) {
    for (auto [m, g] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        auto fam = build_asymp2_family(m, g);
        EXPECT_EQ(keys(fam).size(), fam.size());
        EXPECT_GE(Rational(static_cast<long long>(fam.size())), asymp2_bound(m, g));
        for (const auto& c : fam) {
            expect_valid_zigzag(c);
            EXPECT_EQ(c.dist.s(), 0);
            EXPECT_EQ(c.dist.t(), 4 * m + 2 * g);
        }
    }
}

TEST(Asymp1Family, BoundAndShape) {
    Partition lam{5, 3, 3, 1};
    auto plan = asymp1_plan(lam, lam);
    EXPECT_EQ(plan.n0, n0_constant(lam, lam));
    for (int h : {plan.n0 + 4, plan.n0 + 7}) {
        auto fam = build_asymp1_family(0, lam, lam, h);
        EXPECT_EQ(keys(fam).size(), fam.size());
        EXPECT_GE(BigInt(fam.size()), factorial_bound(h, plan.n0));
        for (const auto& c : fam) {
            expect_valid_zigzag(c);
            EXPECT_EQ(c.lambda, extend_with_ones(lam, h));
            EXPECT_EQ(c.dist.t(), 0);
        }
    }
    EXPECT_THROW(build_asymp1_family(0, lam, lam, plan.n0 + 3), DomainError);
    EXPECT_THROW(asymp1_plan({4}, {4}), DomainError);
}

TEST(SplittingChain, Shape) {
    auto c = build_splitting_chain(5);
    expect_valid_zigzag(c);
    EXPECT_EQ(c.mu, ones(5));
    EXPECT_EQ(c.dist.s(), 2);
    EXPECT_THROW(build_splitting_chain(4), DomainError);
}

TEST(ProperConstants, Values) {
    EXPECT_EQ(N0_constant({5}, {3, 1, 1}), 2);
    EXPECT_FALSE(N0_constant({5, 3, 1}, {5, 3, 1}).has_value());
    auto pc = proper_choice({3, 3}, {6});
    EXPECT_EQ(pc.o, 3);
    EXPECT_EQ(pc.e, 6);
    EXPECT_EQ(pc.sign_case, "zero");
    EXPECT_EQ(c0_constant({3, 3}, {6}), n0_constant(proper_core_type(pc).first, proper_core_type(pc).second) + 3);
    EXPECT_THROW(proper_choice({3, 1}, {4}), DomainError);
    EXPECT_THROW(proper_choice({3, 3}, {4, 2}), DomainError);
}

TEST(ProperFamily, ProperlyMixedAndBound) {
    auto pc = proper_choice({3, 3}, {6});
    auto [cl, cm] = proper_core_type(pc);
    int n0 = n0_constant(cl, cm);
    int h = n0 + 4;
    auto fam = build_proper_family(0, {3, 3}, {6}, h, 2);
    ASSERT_FALSE(fam.covers.empty());
    EXPECT_EQ(keys(fam.covers).size(), fam.covers.size());
    EXPECT_GE(Rational(static_cast<long long>(fam.covers.size())), Rational(factorial_bound(h, n0)) * asymp2_bound(1, 0));
    for (const auto& c : fam.covers) {
        expect_valid_zigzag(c);
        EXPECT_TRUE(is_properly_mixed(c).has_value()) << c.label;
        EXPECT_EQ(c.g, 0);
    }
}

TEST(WallCrossing, ReorderAndResolve) {
    Partition lam{3, 3, 1}, mu{6, 1};
    auto pm = properly_mixed_covers(0, lam, mu, 1, 1);
    ASSERT_EQ(pm.size(), 1u);
    for (const auto& order : all_arrangements(1, 1)) {
        auto img = wall_crossing_map(pm[0], order);
        expect_valid_zigzag(img);
        EXPECT_EQ(img.g, pm[0].g);
        EXPECT_EQ(img.dist.str(), distribution_from_order(order).str());
        auto target = keys(enumerate_covers(0, lam, mu, distribution_from_order(order)));
        EXPECT_TRUE(target.count(canonical_key(img))) << ram_string(order);
        if (order != all_simple_first(1, 1)) {
            EXPECT_EQ(img.edges.size(), pm[0].edges.size());
            EXPECT_EQ(img.contractible_edges().size(), pm[0].contractible_edges().size());
        } else {
            EXPECT_EQ(match_pair(img, 1, 2).picture, 7);
        }
    }
    EXPECT_THROW(wall_crossing_map(fork_pair(), {Ram::Triple}), DomainError);
}

TEST(WallCrossing, Injective) {
    auto fam = build_proper_family(0, {3, 3}, {6}, c0_constant({3, 3}, {6}) + 1, 2);
    ASSERT_GE(fam.covers.size(), 2u);
    std::set<CanonicalKey> images;
    for (const auto& c : fam.covers) {
        auto img = wall_crossing_map(c, all_simple_first(c.dist.s(), c.dist.t()));
        EXPECT_TRUE(is_generalized_zigzag(img).has_value());
        images.insert(canonical_key(img));
    }
    EXPECT_EQ(images.size(), fam.covers.size());
}
