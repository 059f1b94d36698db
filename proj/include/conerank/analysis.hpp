#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "conerank/geometry.hpp"
#include "conerank/random.hpp"
#include "conerank/ranking.hpp"

namespace conerank {

namespace detail {

inline void require_pointed(const PolyhedralCone& cone)
{
    cone.require_proper();
    require(cone.is_pointed(), ErrorKind::precondition, "this analysis requires a pointed cone");
}

} // namespace detail

/// Indices of the maximal elements: no y != x in X with x <=_C y.
inline std::vector<std::size_t> pareto_maximal(std::span<const Vector> points, const PolyhedralCone& cone)
{
    detail::require_pointed(cone);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = points[j] != points[i] && leq_cone(cone, points[i], points[j]);
        }
        if (!dominated) {
            out.push_back(i);
        }
    }
    return out;
}

struct MaximalityReport {
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> maximal;
    std::vector<std::size_t> max_rank;
    /// Max-rank points that are not maximal. Always empty for a pointed cone.
    std::vector<std::size_t> violations;
    /// Maximal points below the top rank: the converse does not hold.
    std::vector<std::size_t> maximal_below_top;
};

inline MaximalityReport check_max_rank_maximality(std::span<const Vector> points, const PolyhedralCone& cone)
{
    MaximalityReport r;
    r.ranks = rank_values(points, cone);
    r.maximal = pareto_maximal(points, cone);
    std::size_t top = r.ranks.empty() ? 0 : *std::max_element(r.ranks.begin(), r.ranks.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool is_max = std::binary_search(r.maximal.begin(), r.maximal.end(), i);
        if (r.ranks[i] == top) {
            r.max_rank.push_back(i);
            if (!is_max) {
                r.violations.push_back(i);
            }
        } else if (is_max) {
            r.maximal_below_top.push_back(i);
        }
    }
    return r;
}

enum class ReversalKind { strict, weak };

/// x ranked below y before the additions and above it after.
struct ReversalPair {
    std::size_t x = 0;
    std::size_t y = 0;
    ReversalKind kind = ReversalKind::strict;
    std::size_t before_x = 0, before_y = 0;
    std::size_t after_x = 0, after_y = 0;
};

struct ReversalReport {
    std::vector<std::size_t> before;
    /// Ranks of the original alternatives within Z = X plus the additions.
    std::vector<std::size_t> after;
    std::vector<ReversalPair> pairs;
    /// With a single addition every rank moves by 0 or 1; empty otherwise.
    std::optional<bool> single_addition_bound;
};

/// Classifies the pair (x, y) given ranks before and after; nullopt when there is no reversal.
inline std::optional<ReversalKind> reversal_kind(std::size_t bx, std::size_t by, std::size_t ax, std::size_t ay)
{
    if (bx < by && ay < ax) {
        return ReversalKind::strict;
    }
    if ((bx == by && ay < ax) || (bx < by && ay == ax)) {
        return ReversalKind::weak;
    }
    return std::nullopt;
}

/// Every ordered pair (x, y) of the same alternatives ranked in two contexts whose order flips.
inline std::vector<ReversalPair> reversal_pairs(const std::vector<std::size_t>& before, const std::vector<std::size_t>& after)
{
    require(before.size() == after.size(), ErrorKind::validation, "rank tables differ in length");
    std::vector<ReversalPair> out;
    for (std::size_t i = 0; i < before.size(); ++i) {
        for (std::size_t j = 0; j < before.size(); ++j) {
            if (i == j) {
                continue;
            }
            if (auto kind = reversal_kind(before[i], before[j], after[i], after[j])) {
                out.push_back({i, j, *kind, before[i], before[j], after[i], after[j]});
            }
        }
    }
    return out;
}

inline ReversalReport detect_reversals(std::span<const Vector> points, std::span<const Vector> additions,
                                       const PolyhedralCone& cone)
{
    require(!additions.empty(), ErrorKind::validation, "reversal analysis needs at least one added alternative");
    std::vector<Vector> z(points.begin(), points.end());
    for (const auto& a : additions) {
        require(a.size() == cone.dim(), ErrorKind::validation, "added alternative has the wrong dimension");
        z.push_back(a);
    }
    ReversalReport r;
    r.before = rank_values(points, cone);
    for (const auto& p : points) {
        r.after.push_back(rank_cone(z, cone, p).value);
    }
    r.pairs = reversal_pairs(r.before, r.after);
    if (additions.size() == 1) {
        bool ok = true;
        for (std::size_t i = 0; i < points.size(); ++i) {
            ok = ok && (r.after[i] == r.before[i] || r.after[i] == r.before[i] + 1);
        }
        r.single_addition_bound = ok;
    }
    return r;
}

struct PeelLayer {
    /// Indices into the original X still present in this round, with their ranks.
    std::vector<std::size_t> members;
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> best;
    /// best plus everything they dominate; removed before the next round.
    std::vector<std::size_t> removed;
};

/// Rank, drop the top alternatives and what they dominate, repeat.
inline std::vector<PeelLayer> peel_ranking(std::span<const Vector> points, const PolyhedralCone& cone)
{
    detail::require_pointed(cone);
    std::vector<std::size_t> alive(points.size());
    for (std::size_t i = 0; i < alive.size(); ++i) {
        alive[i] = i;
    }
    std::vector<PeelLayer> layers;
    while (!alive.empty()) {
        std::vector<Vector> sub;
        for (std::size_t i : alive) {
            sub.push_back(points[i]);
        }
        PeelLayer layer;
        layer.members = alive;
        layer.ranks = rank_values(sub, cone);
        std::size_t top = *std::max_element(layer.ranks.begin(), layer.ranks.end());
        for (std::size_t k = 0; k < alive.size(); ++k) {
            if (layer.ranks[k] == top) {
                layer.best.push_back(alive[k]);
            }
        }
        std::vector<std::size_t> next;
        for (std::size_t i : alive) {
            bool gone = std::any_of(layer.best.begin(), layer.best.end(),
                                    [&](std::size_t b) { return leq_cone(cone, points[i], points[b]); });
            (gone ? layer.removed : next).push_back(i);
        }
        alive = std::move(next);
        layers.push_back(std::move(layer));
    }
    return layers;
}

/// Default outlier gap: a quarter of the set, rounded up.
inline std::size_t default_outlier_gap(std::size_t n) { return (n + 3) / 4; }

/// Alternatives ranked at least `gap` below the top that no other alternative dominates.
inline std::vector<std::size_t> flag_outliers(std::span<const Vector> points, const PolyhedralCone& cone, std::size_t gap)
{
    require(gap >= 1, ErrorKind::validation, "outlier gap must be at least 1");
    detail::require_pointed(cone);
    auto ranks = rank_values(points, cone);
    std::size_t top = *std::max_element(ranks.begin(), ranks.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (ranks[i] + gap > top) {
            continue;
        }
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = points[j] != points[i] && leq_cone(cone, points[i], points[j]);
        }
        if (!dominated) {
            out.push_back(i);
        }
    }
    return out;
}

/// #{y in X, y != x : y <=_C x}.
inline std::vector<std::size_t> domination_counts(std::span<const Vector> points, const PolyhedralCone& cone)
{
    std::vector<std::size_t> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            out[i] += (points[j] != points[i] && leq_cone(cone, points[j], points[i])) ? 1 : 0;
        }
    }
    return out;
}

/// Two alternatives that dominate equally many others yet sit far apart in rank.
struct EqualDominationGap {
    std::vector<Vector> points;
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t rank_x = 0;
    std::size_t rank_y = 0;
    std::size_t dominated = 0;
};

/// Random search over integer instances in [0, 9]^d for the widest such gap.
/// Returns nothing when no pair with a positive gap turned up.
inline std::optional<EqualDominationGap> search_equal_domination_gap(const PolyhedralCone& cone, std::size_t n,
                                                                     std::size_t trials, std::uint64_t seed = default_seed)
{
    Rng rng(seed);
    std::optional<EqualDominationGap> best;
    const std::size_t d = cone.dim();
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Vector> pts;
        for (std::size_t i = 0; i < n; ++i) {
            Vector p(d);
            for (std::size_t j = 0; j < d; ++j) {
                p[j] = rng.integer(0, 9);
            }
            pts.push_back(std::move(p));
        }
        auto ranks = rank_values(pts, cone);
        auto dom = domination_counts(pts, cone);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (dom[i] != dom[j] || ranks[j] <= ranks[i]) {
                    continue;
                }
                std::size_t gap = ranks[j] - ranks[i];
                if (!best || gap > best->rank_y - best->rank_x) {
                    best = EqualDominationGap{pts, i, j, ranks[i], ranks[j], dom[i]};
                }
            }
        }
    }
    return best;
}

} // namespace conerank
