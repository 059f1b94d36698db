#include <cmath>

#include <gtest/gtest.h>

#include "conerank/baselines.hpp"
#include "conerank/classify.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace conerank;

namespace {

const auto orthant2 = PolyhedralCone::nonnegative_orthant(2);
using Sizes = std::vector<std::size_t>;
constexpr auto A = Label::acceptable;
constexpr auto U = Label::unacceptable;
constexpr auto N = Label::unlabeled;

std::vector<double> unit(const Vector& v)
{
    auto d = v.to_doubles();
    double n = 0;
    for (double c : d) {
        n += c * c;
    }
    for (double& c : d) {
        c /= std::sqrt(n);
    }
    return d;
}

double dotd(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace

TEST(LevelSets, ThresholdOnRank)
{
    auto pts = testkit::black_and_yellow();
    EXPECT_TRUE(level_member(pts, orthant2, 0, Vector{-10, -10}));
    EXPECT_TRUE(level_member(pts, orthant2, 4, pts[1]));
    EXPECT_FALSE(level_member(pts, orthant2, 5, pts[1]));
    EXPECT_FALSE(level_member(pts, orthant2, 2, pts[0]));
}

TEST(AlphaBest, HandComputed)
{
    Sizes ranks{1, 1, 2, 3};
    EXPECT_EQ(alpha_best_from_ranks(ranks, 50).n, 2u);
    EXPECT_EQ(alpha_best_from_ranks(ranks, 50).members, (Sizes{2, 3}));
    EXPECT_EQ(alpha_best_from_ranks(ranks, 100).n, 1u);
    EXPECT_EQ(alpha_best_from_ranks(ranks, 25).n, 3u);
    EXPECT_EQ(alpha_best_from_ranks(ranks, ratio(51, 2)).n, 2u);
    EXPECT_THROW(alpha_best_from_ranks(ranks, 0), Error);
    EXPECT_THROW(alpha_best_from_ranks(ranks, 101), Error);
}

TEST(AlphaBest, TwoPointChainKeepsTop)
{
    auto best = alpha_best(testkit::chain(2), orthant2, 50);
    EXPECT_EQ(best.n, 2u);
    EXPECT_EQ(best.members, (Sizes{1}));
}

TEST(AlphaBest, AntichainOfFourAtQuarter)
{
    auto best = alpha_best(testkit::convex_antichain(), orthant2, 25);
    EXPECT_EQ(best.n, 1u);
    EXPECT_EQ(best.members.size(), 4u);
}

TEST(AlphaBest, LargerAlphaNeverRaisesN)
{
    Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = testkit::random_points(rng, 9, 2);
        std::size_t prev = pts.size() + 1;
        for (long alpha : {1L, 10L, 30L, 50L, 70L, 90L, 100L}) {
            auto n = alpha_best(pts, orthant2, alpha).n;
            EXPECT_LE(n, prev);
            prev = n;
        }
    }
}

TEST(AlphaBest, MembersCoverAtLeastAlphaPercent)
{
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = testkit::random_points(rng, 10, 2);
        for (long alpha : {5L, 20L, 50L, 75L, 100L}) {
            auto best = alpha_best(pts, orthant2, alpha);
            EXPECT_GE(best.members.size() * 100, 10u * static_cast<std::size_t>(alpha));
        }
    }
}

TEST(GoodBadUgly, ChainSplitsInHalf)
{
    auto gbu = cluster_gbu(testkit::chain(4), orthant2);
    EXPECT_EQ(gbu.threshold, 3u);
    EXPECT_EQ(gbu.ranks, (Sizes{1, 2, 3, 4}));
    EXPECT_EQ(gbu.reverse_ranks, (Sizes{4, 3, 2, 1}));
    EXPECT_EQ(gbu.good, (Sizes{2, 3}));
    EXPECT_EQ(gbu.bad, (Sizes{0, 1}));
    EXPECT_TRUE(gbu.ugly.empty());
}

TEST(GoodBadUgly, AntichainIsAllUgly)
{
    auto gbu = cluster_gbu(testkit::convex_antichain(), orthant2);
    EXPECT_EQ(gbu.ranks, (Sizes{1, 1, 1, 1}));
    EXPECT_TRUE(gbu.good.empty());
    EXPECT_TRUE(gbu.bad.empty());
    EXPECT_EQ(gbu.ugly, (Sizes{0, 1, 2, 3}));
}

TEST(GoodBadUgly, SingletonOverlaps)
{
    auto gbu = cluster_gbu(std::vector<Vector>{Vector{1, 1}}, orthant2);
    EXPECT_EQ(gbu.overlap, (Sizes{0}));
    EXPECT_EQ(gbu.ugly, (Sizes{0}));
}

TEST(GoodBadUgly, Thresholds)
{
    EXPECT_EQ(majority_threshold(1), 1u);
    EXPECT_EQ(majority_threshold(4), 3u);
    EXPECT_EQ(majority_threshold(5), 3u);
}

TEST(Threshold, PerfectSplit)
{
    auto m = fit_threshold_from_ranks(Sizes{1, 2, 3, 4}, {U, U, A, A});
    EXPECT_EQ(m.n, 3u);
    EXPECT_EQ(m.errors, 0u);
    EXPECT_EQ(m.error_rate, 0);
    EXPECT_EQ(m.scan, (Sizes{2, 2, 1, 0, 1, 2}));
}

TEST(Threshold, NoisyLabelsAndTies)
{
    auto m = fit_threshold_from_ranks(Sizes{1, 2, 3, 4}, {U, A, U, A});
    EXPECT_EQ(m.n, 2u);
    EXPECT_EQ(m.errors, 1u);
    EXPECT_EQ(m.false_positives, 1u);
    EXPECT_EQ(m.error_rate, ratio(1, 4));
    auto all_good = fit_threshold_from_ranks(Sizes{2, 1}, {A, N});
    EXPECT_EQ(all_good.n, 0u);
    EXPECT_EQ(all_good.labeled, 1u);
    EXPECT_THROW(fit_threshold_from_ranks(Sizes{1}, {N}), Error);
}

TEST(Threshold, MatchesIndependentRecount)
{
    Rng rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = testkit::random_points(rng, 9, 2);
        std::vector<Label> labels;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            labels.push_back(static_cast<Label>(rng.integer(0, 2)));
        }
        if (std::all_of(labels.begin(), labels.end(), [](Label l) { return l == N; })) {
            labels[0] = A;
        }
        auto m = fit_threshold(pts, labels, orthant2);
        auto ranks = rank_values(pts, orthant2);
        std::size_t best = pts.size() + 1;
        for (std::size_t n = 0; n <= pts.size() + 1; ++n) {
            std::size_t errors = 0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                errors += (labels[i] == A && ranks[i] < n) || (labels[i] == U && ranks[i] >= n);
            }
            best = std::min(best, errors);
            EXPECT_LE(m.errors, errors);
        }
        EXPECT_EQ(m.errors, best);
    }
}

TEST(Propagation, FollowsTheOrder)
{
    auto p = propagate_labels(testkit::chain(4), {N, A, N, N}, orthant2);
    EXPECT_EQ(p.labels, (std::vector<Label>{N, A, A, A}));
    EXPECT_EQ(p.newly_labeled, (Sizes{2, 3}));
    EXPECT_TRUE(p.conflicts.empty());
}

TEST(Propagation, ConflictsAreLeftUnlabeled)
{
    auto p = propagate_labels(testkit::chain(4), {N, A, N, U}, orthant2);
    EXPECT_EQ(p.labels, (std::vector<Label>{U, A, N, U}));
    EXPECT_EQ(p.conflicts, (Sizes{2}));
}

TEST(Propagation, IncomparablePointsStayUnlabeled)
{
    auto p = propagate_labels(testkit::convex_antichain(), {A, N, N, U}, orthant2);
    EXPECT_EQ(p.labels, (std::vector<Label>{A, N, N, U}));
}

TEST(Svm, AxisAlignedClasses)
{
    std::vector<Vector> pos{Vector{6, 0}, Vector{6, 10}, Vector{8, 3}};
    std::vector<Vector> neg{Vector{4, 0}, Vector{4, 10}, Vector{1, 5}};
    auto w = svm_normal(pos, neg);
    EXPECT_EQ(w[1], 0);
    EXPECT_GT(w[0], 0);
}

TEST(Svm, ClosestPairBetweenVertexAndEdge)
{
    std::vector<Vector> pos{Vector{2, 2}};
    std::vector<Vector> neg{Vector{0, 0}, Vector{4, 0}};
    auto w = svm_normal(pos, neg);
    EXPECT_EQ(w, (Vector{0, 2}));
}

TEST(Svm, InseparableClassesThrow)
{
    std::vector<Vector> pos{Vector{0, 0}, Vector{2, 2}};
    std::vector<Vector> neg{Vector{1, 1}};
    try {
        svm_normal(pos, neg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::precondition);
    }
    EXPECT_THROW(svm_normal(pos, std::vector<Vector>{}), Error);
}

TEST(Svm, IterativeAgreesWithExact)
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto cohort = separable_cohort(20, 0.3, seed);
        std::vector<Vector> pos;
        std::vector<Vector> neg;
        for (std::size_t i = 0; i < cohort.points.size(); ++i) {
            (cohort.labels[i] == A ? pos : neg).push_back(cohort.points[i]);
        }
        auto exact = detail::svm_normal_exact(pos, neg);
        auto approx = detail::svm_normal_iterative(pos, neg);
        ASSERT_TRUE(exact.has_value());
        ASSERT_TRUE(approx.has_value());
        EXPECT_GT(dotd(unit(*exact), unit(*approx)), 1 - 1e-8) << "seed " << seed;
        EXPECT_GT(dotd(unit(*exact), cohort.rule), 0);
    }
}

TEST(Svm, ThreeDimensionsExactVersusIterative)
{
    Rng rng(41);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto pts = testkit::random_points(rng, 12, 3);
        std::vector<Vector> pos;
        std::vector<Vector> neg;
        for (const auto& p : pts) {
            Rational s = p[0] + 2 * p[1] - p[2];
            if (s > 6) {
                pos.push_back(p);
            } else if (s < 4) {
                neg.push_back(p);
            }
        }
        if (pos.empty() || neg.empty()) {
            continue;
        }
        auto exact = detail::svm_normal_exact(pos, neg);
        auto approx = detail::svm_normal_iterative(pos, neg);
        ASSERT_TRUE(exact && approx);
        EXPECT_GT(dotd(unit(*exact), unit(*approx)), 1 - 1e-8);
        ++checked;
    }
    EXPECT_GT(checked, 20);
}

TEST(Align, AlreadyAlignedIsIdentity)
{
    std::vector<Vector> pts{Vector{6, 6}, Vector{8, 7}, Vector{1, 1}, Vector{2, 0}};
    auto out = align_cone_svm(pts, {A, A, U, U}, orthant2);
    EXPECT_EQ(out.angle, 0);
    EXPECT_EQ(out.cone.dual_rays(), orthant2.dual_rays());
}

TEST(Align, VerticalBoundaryRotatesByFortyFiveDegrees)
{
    std::vector<Vector> pts{Vector{6, 0}, Vector{6, 10}, Vector{4, 0}, Vector{4, 10}};
    auto out = align_cone_svm(pts, {A, A, U, U}, orthant2);
    EXPECT_NEAR(out.angle, std::atan(1.0), 1e-12);
    const double h = std::sqrt(0.5);
    std::vector<std::vector<double>> expected{{h, -h}, {h, h}};
    auto rays = out.cone.dual_rays();
    ASSERT_EQ(rays.size(), 2u);
    for (const auto& e : expected) {
        bool hit = false;
        for (const auto& r : rays) {
            hit = hit || dotd(unit(r), e) > 1 - 1e-12;
        }
        EXPECT_TRUE(hit);
    }
}

TEST(Align, RotationIsAnIsometryOfTheDualRays)
{
    Rng rng(43);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto cohort = separable_cohort(16, 0.5, seed);
        auto cone = testkit::random_pointed_cone(rng, 2);
        try {
            auto out = align_cone_svm(cohort.points, cohort.labels, cone);
            auto before = cone.dual_rays();
            ASSERT_EQ(out.cone.dual_rays().size(), before.size());
            // Angles between rays are preserved; order may change, so compare sorted Gram entries.
            auto gram = [](const std::vector<Vector>& rs) {
                std::vector<double> g;
                for (std::size_t i = 0; i < rs.size(); ++i) {
                    for (std::size_t j = i + 1; j < rs.size(); ++j) {
                        g.push_back(dotd(unit(rs[i]), unit(rs[j])));
                    }
                }
                std::sort(g.begin(), g.end());
                return g;
            };
            auto ga = gram(before);
            auto gb = gram(out.cone.dual_rays());
            for (std::size_t k = 0; k < ga.size(); ++k) {
                EXPECT_NEAR(ga[k], gb[k], 1e-12);
            }
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::precondition);
        }
    }
}
