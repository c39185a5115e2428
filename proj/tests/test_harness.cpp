#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "tropz/harness.hpp"

using namespace tropz;
using namespace tropz::harness;

namespace {

GridSpec small_grid(int jobs) {
    GridSpec g;
    g.d_max = 3;
    g.g_max = 1;
    g.points_max = 4;
    g.jobs = jobs;
    g.proper_extra_d_max = 0;
    return g;
}

}  // namespace

TEST(Grid, ExcludedPairsAreSkipped) {
    auto cases = grid_cases(small_grid(1));
    bool seen = false;
    for (const auto& c : cases)
        if (c.lam == Partition({2}) && c.mu == Partition({1, 1})) {
            seen = true;
            EXPECT_EQ(c.skip, "standing assumption");
        }
    EXPECT_TRUE(seen);
    auto rep = verify_splitting_invariance(small_grid(1));
    for (const auto& r : rep.doc["cases"])
        if (r["lambda"] == json({2}) && r["mu"] == json({1, 1})) {
            EXPECT_EQ(r["status"], "skipped");
            EXPECT_EQ(r["reason"], "standing assumption");
        }
}

TEST(Grid, EmptyGridPasses) {
    GridSpec g = small_grid(1);
    g.d_max = 0;
    auto rep = verify_splitting_invariance(g);
    EXPECT_EQ(rep.doc["summary"]["cases"], 0);
    EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Grid, ResourceNotes) {
    GridSpec g = small_grid(1);
    g.degree_max = 2;
    auto rep = verify_splitting_invariance(g);
    EXPECT_GT(rep.resource_notes(), 0);
    EXPECT_EQ(rep.violations(), 0);
    EXPECT_EQ(rep.exit_code(), 2);
}

TEST(Campaign, DeterministicAcrossJobs) {
    auto a = verify_sandwich_and_parity(small_grid(1)).doc.dump();
    auto b = verify_sandwich_and_parity(small_grid(4)).doc.dump();
    EXPECT_EQ(a, b);
    auto c = verify_splitting_invariance(small_grid(1)).doc.dump();
    auto d = verify_splitting_invariance(small_grid(3)).doc.dump();
    EXPECT_EQ(c, d);
}

TEST(Campaign, CheckpointResume) {
    auto path = std::filesystem::temp_directory_path() / "tropz_checkpoint_test.jsonl";
    std::filesystem::remove(path);
    GridSpec g = small_grid(2);
    g.checkpoint = path.string();
    auto first = verify_splitting_invariance(g).doc.dump();
    ASSERT_TRUE(std::filesystem::exists(path));
    auto size = std::filesystem::file_size(path);
    auto second = verify_splitting_invariance(g).doc.dump();
    EXPECT_EQ(first, second);
    EXPECT_EQ(std::filesystem::file_size(path), size);  // nothing recomputed
    std::filesystem::remove(path);
}

TEST(Campaign, SplittingInvarianceSmallGrid) {
    auto rep = verify_splitting_invariance(small_grid(2));
    EXPECT_EQ(rep.violations(), 0);
    for (const auto& r : rep.doc["cases"])
        if (r["key"] == "g=0;lam=(3);mu=(1,1,1);s=1;t=0") {
            ASSERT_EQ(r["arrangements"].size(), 1u);
            EXPECT_EQ(r["arrangements"][0]["z_by_split"], json({1, 1}));
        }
}

TEST(Campaign, NormalizationFactorIsOne) {
    auto rep = reconcile_normalization(small_grid(2));
    EXPECT_EQ(rep.violations(), 0);
    EXPECT_EQ(rep.doc["summary"]["cases"].get<long>() - rep.doc["summary"]["skipped"].get<long>() > 0, true);
}

TEST(Campaign, ProperBoundSmallGrid) {
    auto rep = verify_proper_lower_bound(small_grid(2));
    EXPECT_EQ(rep.violations(), 0);
}

TEST(Json, RationalEncoding) {
    EXPECT_EQ(to_json(Rational(1, 3)), json({{"num", 1}, {"den", 3}}));
    EXPECT_TRUE(to_json(factorial(30)).is_string());
    auto covers = enumerate_covers(0, {3}, {1, 1, 1}, trivial_distribution(1, 0));
    auto j = cover_to_json(covers.at(0));
    EXPECT_EQ(j["g"], 0);
    EXPECT_EQ(j["zigzag"], true);
    EXPECT_NE(cover_to_dot(covers[0]).find("digraph"), std::string::npos);
}
