#include <gtest/gtest.h>

#include "conerank/set_ranking.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace conerank;

namespace {

const auto orthant2 = PolyhedralCone::nonnegative_orthant(2);

std::vector<Vector> pick(const std::vector<Vector>& xs, std::initializer_list<std::size_t> idx)
{
    std::vector<Vector> out;
    for (std::size_t i : idx) {
        out.push_back(xs[i]);
    }
    return out;
}

// Componentwise order, written without the cone machinery.
bool below(const Vector& a, const Vector& b)
{
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
    }
    return true;
}

std::size_t cx_oracle(const std::vector<Vector>& a, const std::vector<Vector>& x)
{
    std::size_t c = 0;
    for (const auto& p : x) {
        bool hit = false;
        for (const auto& q : a) {
            hit = hit || below(p, q);
        }
        c += hit ? 1 : 0;
    }
    return c;
}

} // namespace

TEST(SetDominates, Basics)
{
    EXPECT_TRUE(set_dominates(std::vector<Vector>{Vector{1, 1}}, std::vector<Vector>{Vector{0, 0}}, orthant2));
    EXPECT_FALSE(set_dominates(std::vector<Vector>{Vector{1, 0}}, std::vector<Vector>{Vector{0, 1}}, orthant2));
    auto x = testkit::diagonal_triple();
    EXPECT_TRUE(set_dominates(x, x, orthant2));
    EXPECT_TRUE(set_dominates(std::vector<Vector>{}, std::vector<Vector>{}, orthant2));
    EXPECT_FALSE(set_dominates(std::vector<Vector>{}, x, orthant2));
    EXPECT_TRUE(set_dominates(x, std::vector<Vector>{}, orthant2));
}

TEST(SetRank, SingletonEqualsPointRank)
{
    auto x = testkit::diagonal_triple();
    for (const auto& p : x) {
        EXPECT_EQ(set_rank(std::vector<Vector>{p}, x, orthant2).value, rank_cone(x, orthant2, p).value);
    }
    EXPECT_EQ(set_rank_w(std::vector<Vector>{x[1]}, x, Vector{1, 1}).value, 3u);
}

TEST(SetRank, LeaveOneOutOnTheDiagonalTriple)
{
    auto x = testkit::diagonal_triple();
    auto a1 = pick(x, {1, 2});
    auto a2 = pick(x, {0, 2});
    auto a3 = pick(x, {0, 1});
    EXPECT_EQ(set_rank(a1, x, orthant2).value, 2u);
    EXPECT_EQ(set_rank(a2, x, orthant2).value, 1u);
    EXPECT_EQ(set_rank(a3, x, orthant2).value, 2u);
    EXPECT_EQ(*set_rank(a1, x, orthant2).attaining, 0u);
    EXPECT_EQ(indicator_cx(a1, x, orthant2).value, 2u);
    EXPECT_EQ(indicator_cx(a2, x, orthant2).value, 2u);
    EXPECT_EQ(indicator_cx(a3, x, orthant2).value, 2u);
    EXPECT_EQ(indicator_cx(a2, x, orthant2).dominated, (std::vector<std::size_t>{0, 2}));
}

TEST(SetRank, EmptySetConventions)
{
    auto x = testkit::diagonal_triple();
    auto r = set_rank(std::vector<Vector>{}, x, orthant2);
    EXPECT_EQ(r.value, 0u);
    EXPECT_FALSE(r.attaining.has_value());
    EXPECT_EQ(indicator_cx(std::vector<Vector>{}, x, orthant2).value, 0u);
    EXPECT_EQ(indicator_cx(x, x, orthant2).value, x.size());
}

TEST(Refinement, RnablaCounterexample)
{
    auto x = testkit::diagonal_triple();
    auto b = pick(x, {1, 2});
    auto report = refinement_check(x, b, x, orthant2);
    EXPECT_TRUE(report.strict);
    EXPECT_EQ(report.rnabla_a.value, 2u);
    EXPECT_EQ(report.rnabla_b.value, 2u);
    EXPECT_EQ(report.rnabla, Comparison::equal);
    EXPECT_FALSE(report.rnabla_strict);
    EXPECT_TRUE(report.cx_strict);
    EXPECT_EQ(report.cx_a.value, 3u);
    EXPECT_EQ(report.cx_b.value, 2u);
}

TEST(Refinement, EqualSetsTriggerNothing)
{
    auto x = testkit::diagonal_triple();
    auto report = refinement_check(x, x, x, orthant2);
    EXPECT_FALSE(report.strict);
    EXPECT_FALSE(report.cx_strict);
    EXPECT_FALSE(report.rnabla_strict);
    EXPECT_EQ(report.cx, Comparison::equal);
}

TEST(Indicator, MatchesComponentwiseOracle)
{
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = testkit::random_points(rng, 12, 2);
        std::vector<Vector> a;
        for (std::size_t i = 0; i < 4; ++i) {
            a.push_back(testkit::random_int_vector(rng, 2, -2, 11));
        }
        EXPECT_EQ(indicator_cx(a, x, orthant2).value, cx_oracle(a, x));
    }
}

TEST(Indicator, StrictDominationGainsAtLeastOne)
{
    Rng rng(5);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto x = testkit::random_points(rng, 10, 2);
        std::vector<Vector> b;
        for (const auto& p : x) {
            if (rng.uniform() < 0.3) {
                b.push_back(p);
            }
        }
        std::vector<Vector> a;
        for (const auto& q : b) {
            std::vector<Vector> above;
            for (const auto& p : x) {
                if (below(q, p)) {
                    above.push_back(p);
                }
            }
            a.push_back(above[static_cast<std::size_t>(rng.integer(0, static_cast<long>(above.size()) - 1))]);
        }
        std::vector<Vector> free;
        for (const auto& p : x) {
            bool covered = false;
            for (const auto& q : b) {
                covered = covered || below(p, q);
            }
            if (!covered) {
                free.push_back(p);
            }
        }
        if (free.empty()) {
            continue;
        }
        a.push_back(free[static_cast<std::size_t>(rng.integer(0, static_cast<long>(free.size()) - 1))]);
        auto report = refinement_check(a, b, x, orthant2);
        ASSERT_TRUE(report.strict);
        EXPECT_TRUE(report.cx_strict);
        EXPECT_GE(report.cx_a.value, report.cx_b.value + 1);
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(SetRank, MonotoneUnderSetOrder)
{
    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        auto cone = testkit::random_pointed_cone(rng, 2);
        auto x = testkit::random_points(rng, 10, 2);
        std::vector<Vector> a(x.begin(), x.begin() + 3);
        std::vector<Vector> b;
        for (const auto& p : a) {
            Vector shift(2);
            for (const auto& r : cone.rays()) {
                shift += r * Rational(rng.integer(0, 3));
            }
            b.push_back(p - shift);
        }
        ASSERT_TRUE(set_dominates(a, b, cone));
        EXPECT_LE(set_rank(b, x, cone).value, set_rank(a, x, cone).value);
        EXPECT_LE(indicator_cx(b, x, cone).value, indicator_cx(a, x, cone).value);
        for (const auto& z : x) {
            std::vector<Vector> single{z};
            EXPECT_GE(set_rank(single, x, cone).value, indicator_cx(single, x, cone).value);
        }
    }
}

TEST(Indicator, MaximalElementsCoverEverything)
{
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto x = testkit::random_points(rng, 12, 2);
        std::vector<Vector> tops;
        for (const auto& p : x) {
            bool dominated = false;
            for (const auto& q : x) {
                dominated = dominated || (q != p && below(p, q));
            }
            if (!dominated) {
                tops.push_back(p);
            }
        }
        EXPECT_EQ(indicator_cx(tops, x, orthant2).value, x.size());
    }
}
