#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "tropz/enumeration.hpp"
#include "tropz/factorization.hpp"

using namespace tropz;

TEST(Distribution, Trivial) {
    EXPECT_EQ(trivial_distribution(2, 1).str(), "PPp");
    EXPECT_EQ(trivial_distribution(0, 3).str(), "ppp");
    EXPECT_EQ(trivial_distribution(1, 0).str(), "P");
    EXPECT_EQ(trivial_distribution(2, 1).slots(), 5);
}

TEST(Distribution, FromTuple) {
    EXPECT_EQ(distribution_from_tuple({Ram::Triple}, {Ram::Simple, Ram::Simple}).str(), "P-p+p+");
    EXPECT_EQ(distribution_from_tuple({}, {Ram::Triple}).str(), "P+");
    EXPECT_EQ(distribution_from_tuple({Ram::Simple, Ram::Triple}, {}).str(), "p-P-");
    EXPECT_EQ(with_split(distribution_from_order(parse_ram_string("232")), 1).str(), "p-P+p+");
}

TEST(Enumerate, TrivialCover) {
    auto covers = enumerate_covers(0, {1}, {1}, Distribution{});
    ASSERT_EQ(covers.size(), 1u);
    ASSERT_EQ(covers[0].edges.size(), 1u);
    EXPECT_EQ(covers[0].edges[0].weight, 1);
}

TEST(Enumerate, SinglePairCover) {
    auto covers = enumerate_covers(0, {3}, {1, 1, 1}, trivial_distribution(1, 0));
    ASSERT_EQ(covers.size(), 1u);
    EXPECT_EQ(match_pair(covers[0], 0, 1).picture, 4);
}

TEST(Enumerate, RiemannHurwitzAndDegreeGuards) {
    EXPECT_THROW(enumerate_covers(0, {3}, {1, 1, 1}, trivial_distribution(0, 3)), DomainError);
    EnumOptions small{2, 1000, 1};
    EXPECT_THROW(enumerate_covers(0, {1, 1, 1}, {1, 1, 1}, trivial_distribution(0, 4), small), ResourceError);
}

TEST(Enumerate, CoversAreValidAndDistinct) {
    for (const auto& order : all_arrangements(1, 2)) {
        auto covers = enumerate_covers(1, {2, 2}, {3, 1}, distribution_from_order(order));
        std::set<CanonicalKey> keys;
        for (const auto& c : covers) {
            EXPECT_EQ(validation_error(c), "");
            EXPECT_TRUE(is_resolving(c));
            keys.insert(canonical_key(c));
        }
        EXPECT_EQ(keys.size(), covers.size());
    }
}

TEST(Enumerate, ThreadedMatchesSerial) {
    auto d = distribution_from_order(parse_ram_string("2323"));
    auto a = enumerate_covers(1, {2, 1, 1}, {2, 1, 1}, d, {8, 1000000, 1});
    auto b = enumerate_covers(1, {2, 1, 1}, {2, 1, 1}, d, {8, 1000000, 4});
    EXPECT_FALSE(a.empty());
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(canonical_key(a[i]), canonical_key(b[i]));
}

TEST(ComplexTropical, PinnedValues) {
    EXPECT_EQ(complex_tropical_value(0, {1, 1, 1}, {1, 1, 1}, 4), 4);
    EXPECT_EQ(complex_tropical_value(1, {3}, {3}, 2), 2);
    EXPECT_EQ(complex_tropical_value(0, {2, 1}, {1, 1, 1}, 3), 4);
}

// Simple-branching correspondence against a brute-force symmetric-group count.
TEST(ComplexTropical, MatchesBruteForceCount) {
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : partitions_of(d))
            for (const auto& mu : partitions_of(d))
                for (int g = 0; g <= 1; ++g) {
                    int t = lam.length() + mu.length() + 2 * g - 2;
                    if (t <= 0 || t > 5) continue;
                    long long n = brute::labeled_count(lam.parts(), mu.parts(), std::vector<int>(t, 2));
                    EXPECT_EQ(complex_tropical_value(g, lam, mu, t), Rational(n, factorial(d)))
                        << g << ' ' << lam.str() << mu.str();
                }
}
