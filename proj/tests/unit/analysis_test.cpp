#include <gtest/gtest.h>

#include "conerank/analysis.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace conerank;

namespace {

const auto orthant2 = PolyhedralCone::nonnegative_orthant(2);
using Sizes = std::vector<std::size_t>;

std::vector<Vector> with(std::vector<Vector> a, const std::vector<Vector>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

TEST(Pareto, SmallCases)
{
    EXPECT_EQ(pareto_maximal(testkit::chain(2), orthant2), (Sizes{1}));
    EXPECT_EQ(pareto_maximal(std::vector<Vector>{Vector{0, 1}, Vector{1, 0}}, orthant2), (Sizes{0, 1}));
    EXPECT_EQ(pareto_maximal(testkit::black_and_yellow(), orthant2), (Sizes{0, 1, 2}));
}

TEST(Pareto, RejectsNonPointedCones)
{
    auto h = PolyhedralCone::halfspace(Vector{1, 1});
    EXPECT_THROW(pareto_maximal(testkit::chain(2), h), Error);
}

TEST(Maximality, YellowPointsLiftTheMiddle)
{
    auto report = check_max_rank_maximality(testkit::black_and_yellow(), orthant2);
    EXPECT_EQ(report.max_rank, (Sizes{1}));
    EXPECT_EQ(report.ranks[1], 4u);
    EXPECT_TRUE(report.violations.empty());
    EXPECT_EQ(report.maximal_below_top, (Sizes{0, 2}));
}

TEST(Maximality, TopRankIsAlwaysMaximal)
{
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t d = 2 + static_cast<std::size_t>(trial % 2);
        auto cone = testkit::random_pointed_cone(rng, d);
        auto pts = testkit::random_points(rng, 12, d);
        EXPECT_TRUE(check_max_rank_maximality(pts, cone).violations.empty());
    }
}

TEST(Reversal, FiveAdditionsFlipTheOrder)
{
    auto report = detect_reversals(testkit::reversal_base(), testkit::reversal_additions(), orthant2);
    EXPECT_EQ(report.before, (Sizes{1, 2, 1}));
    EXPECT_EQ(report.after[0], 6u);
    EXPECT_EQ(report.after[1], 2u);
    bool found = false;
    for (const auto& p : report.pairs) {
        if (p.x == 0 && p.y == 1) {
            found = true;
            EXPECT_EQ(p.kind, ReversalKind::strict);
            EXPECT_EQ(p.before_x, 1u);
            EXPECT_EQ(p.before_y, 2u);
            EXPECT_EQ(p.after_x, 6u);
            EXPECT_EQ(p.after_y, 2u);
        }
    }
    EXPECT_TRUE(found);
    EXPECT_FALSE(report.single_addition_bound.has_value());
}

TEST(Reversal, KindClassification)
{
    EXPECT_EQ(reversal_kind(1, 2, 3, 2), ReversalKind::strict);
    EXPECT_EQ(reversal_kind(2, 2, 3, 2), ReversalKind::weak);
    EXPECT_EQ(reversal_kind(1, 2, 2, 2), ReversalKind::weak);
    EXPECT_FALSE(reversal_kind(2, 2, 2, 2).has_value());
    EXPECT_FALSE(reversal_kind(1, 2, 1, 2).has_value());
}

TEST(Reversal, SingleAdditionMovesRanksByAtMostOne)
{
    Rng rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t d = 2 + static_cast<std::size_t>(trial % 2);
        auto cone = testkit::random_pointed_cone(rng, d);
        auto pts = testkit::random_points(rng, 8, d);
        std::vector<Vector> add{testkit::random_int_vector(rng, d, -2, 11)};
        auto report = detect_reversals(pts, add, cone);
        ASSERT_TRUE(report.single_addition_bound.has_value());
        EXPECT_TRUE(*report.single_addition_bound);
    }
}

TEST(Reversal, ComparablePairsNeverReverse)
{
    Rng rng(27);
    for (int trial = 0; trial < 40; ++trial) {
        auto cone = testkit::random_pointed_cone(rng, 2);
        auto pts = testkit::random_points(rng, 8, 2);
        auto add = testkit::random_points(rng, 4, 2, -3, 12);
        auto report = detect_reversals(pts, add, cone);
        for (const auto& p : report.pairs) {
            EXPECT_FALSE(leq_cone(cone, pts[p.x], pts[p.y]));
        }
    }
}

TEST(Reversal, ChainTopStaysAhead)
{
    Rng rng(29);
    auto base = testkit::chain(2);
    for (int trial = 0; trial < 30; ++trial) {
        auto add = testkit::random_points(rng, 3, 2, -3, 4);
        auto report = detect_reversals(base, add, orthant2);
        EXPECT_LT(report.after[0], report.after[1]);
        EXPECT_TRUE(report.pairs.empty());
    }
}

TEST(Peel, ReversalInstanceHasTwoLayers)
{
    auto z = with(testkit::reversal_base(), testkit::reversal_additions());
    auto layers = peel_ranking(z, orthant2);
    ASSERT_EQ(layers.size(), 2u);
    EXPECT_EQ(layers[0].best, (Sizes{0}));
    EXPECT_EQ(layers[0].removed, (Sizes{0, 3, 4, 5, 6, 7}));
    EXPECT_EQ(layers[1].members, (Sizes{1, 2}));
    EXPECT_EQ(layers[1].best, (Sizes{1}));
}

TEST(Peel, AntichainAndChain)
{
    auto flat = peel_ranking(testkit::convex_antichain(), orthant2);
    ASSERT_EQ(flat.size(), 1u);
    EXPECT_EQ(flat[0].ranks, (Sizes{1, 1, 1, 1}));
    EXPECT_EQ(peel_ranking(testkit::chain(5), orthant2).size(), 1u);
}

TEST(Outliers, UpperPointFlagged)
{
    auto z = with(testkit::reversal_base(), testkit::reversal_additions());
    EXPECT_EQ(flag_outliers(z, orthant2, 3), (Sizes{1}));
    EXPECT_EQ(default_outlier_gap(8), 2u);
    EXPECT_EQ(default_outlier_gap(9), 3u);
}

TEST(Outliers, NoneInAntichainOrChain)
{
    EXPECT_TRUE(flag_outliers(testkit::convex_antichain(), orthant2, 1).empty());
    EXPECT_TRUE(flag_outliers(testkit::chain(6), orthant2, 1).empty());
}

TEST(Outliers, DominationCounts)
{
    auto z = with(testkit::reversal_base(), testkit::reversal_additions());
    auto dom = domination_counts(z, orthant2);
    EXPECT_EQ(dom[0], 5u);
    EXPECT_EQ(dom[1], 1u);
    EXPECT_EQ(dom[2], 0u);
}

TEST(EqualDomination, SearchReportsConsistentPair)
{
    auto found = search_equal_domination_gap(orthant2, 8, 30, 99);
    ASSERT_TRUE(found.has_value());
    auto ranks = rank_values(found->points, orthant2);
    auto dom = domination_counts(found->points, orthant2);
    EXPECT_EQ(ranks[found->x], found->rank_x);
    EXPECT_EQ(ranks[found->y], found->rank_y);
    EXPECT_EQ(dom[found->x], dom[found->y]);
    EXPECT_GT(found->rank_y, found->rank_x);
}
