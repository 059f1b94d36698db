#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "conerank/alternatives.hpp"
#include "conerank/cell_enumeration.hpp"
#include "conerank/geometry.hpp"
#include "conerank/random.hpp"
#include "conerank/rank_result.hpp"
#include "conerank/vertex_search.hpp"

namespace conerank {

enum class RankMethod {
    automatic,        ///< sweep for d = 2, vertex search otherwise
    sweep,            ///< angular sweep, d = 2 only
    vertex_search,    ///< pruned walk over arrangement vertices, any d
    face_enumeration, ///< one sample in every arrangement cell, any d (slow, for cross-checks)
};

/// Desk-scale budget of the exact evaluator.
inline constexpr std::size_t exact_budget_points = 200;
inline constexpr std::size_t exact_budget_dim = 4;

/// r_{X,w}(z) = #{x in X : w.x <= w.z}.
inline std::size_t rank_w(std::span<const Vector> points, const Vector& w, const Vector& z)
{
    require(!w.is_zero(), ErrorKind::validation, "weight vector must be nonzero");
    require(w.size() == z.size(), ErrorKind::validation, "weight and point dimensions differ");
    const Rational wz = dot(w, z);
    std::size_t count = 0;
    for (const auto& x : points) {
        require(x.size() == z.size(), ErrorKind::validation, "alternative and point dimensions differ");
        if (dot(w, x) <= wz) {
            ++count;
        }
    }
    return count;
}

inline std::size_t rank_w(const AlternativeSet& alternatives, const Vector& w, const Vector& z)
{
    return rank_w(alternatives.points(), w, z);
}

namespace detail {

/// Checks the cone against the ranking preconditions. Returns true when C+ is a
/// single ray (C a halfspace), in which case the cone ranking is one w-ranking.
inline bool check_ranking_cone(const PolyhedralCone& cone)
{
    cone.require_proper();
    if (cone.dual_rays().size() == 1) {
        return true;
    }
    require(cone.is_pointed(), ErrorKind::precondition, "cone ranking requires a pointed cone");
    return false;
}

inline std::vector<Vector> differences(std::span<const Vector> points, const Vector& z)
{
    std::vector<Vector> diffs;
    diffs.reserve(points.size());
    for (const auto& x : points) {
        require(x.size() == z.size(), ErrorKind::validation, "alternative and point dimensions differ");
        diffs.push_back(x - z);
    }
    return diffs;
}

inline RankResult rank_halfspace(std::span<const Vector> points, const Vector& w, const Vector& z)
{
    auto diffs = differences(points, z);
    MinTracker tracker(points.size());
    tracker.offer(w, counted_set(diffs, w));
    return tracker.result();
}

/// Wedges of C+ in the plane as pairs of bounding rays (each less than pi wide).
inline std::vector<std::pair<Vector, Vector>> planar_dual_wedges(const PolyhedralCone& cone)
{
    const auto& g = cone.dual_rays();
    if (g.size() == 2) {
        return {{g[0], g[1]}};
    }
    // C is a ray, C+ a halfplane: generators are +-l and one more direction.
    require(g.size() == 3, ErrorKind::precondition, "unexpected dual cone in the plane");
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (g[i] == -g[j]) {
                const Vector& r = g[3 - i - j];
                return {{g[i], r}, {r, g[j]}};
            }
        }
    }
    fail(ErrorKind::precondition, "unexpected dual cone in the plane");
}

/// Angular sweep over C+ in d = 2. Along a wedge w(t) = (1-t) g0 + t g1 each
/// alternative is counted on a closed t-interval; the candidates are the
/// wedge ends, every breakpoint, and the midpoint of every gap.
inline RankResult sweep_2d(std::span<const Vector> points, const PolyhedralCone& cone, const Vector& z)
{
    require(cone.dim() == 2, ErrorKind::validation, "the angular sweep needs d = 2");
    auto diffs = differences(points, z);
    const std::size_t n = diffs.size();
    MinTracker tracker(n);

    for (const auto& [g0, g1] : planar_dual_wedges(cone)) {
        struct Span {
            enum Kind { none, all, low, high } kind;
            Rational root;
        };
        std::vector<Span> spans(n);
        std::vector<Rational> breaks{Rational(0), Rational(1)};
        for (std::size_t i = 0; i < n; ++i) {
            Rational alpha = dot(g0, diffs[i]);
            Rational beta = dot(g1, diffs[i]);
            if (alpha <= 0 && beta <= 0) {
                spans[i].kind = Span::all;
            } else if (alpha > 0 && beta > 0) {
                spans[i].kind = Span::none;
            } else {
                spans[i].kind = alpha <= 0 ? Span::low : Span::high;
                spans[i].root = alpha / (alpha - beta);
                breaks.push_back(spans[i].root);
            }
        }
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

        // Candidate 2j is breaks[j]; candidate 2j+1 is the midpoint after it.
        const std::size_t n_cand = 2 * breaks.size() - 1;
        auto candidate_index = [&](const Rational& t) {
            return 2 * static_cast<std::size_t>(std::lower_bound(breaks.begin(), breaks.end(), t) - breaks.begin());
        };
        std::vector<std::pair<std::size_t, std::size_t>> ranges(n); // inclusive, empty when first > second
        std::vector<long> delta(n_cand + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            switch (spans[i].kind) {
            case Span::none: ranges[i] = {1, 0}; break;
            case Span::all: ranges[i] = {0, n_cand - 1}; break;
            case Span::low: ranges[i] = {0, candidate_index(spans[i].root)}; break;
            case Span::high: ranges[i] = {candidate_index(spans[i].root), n_cand - 1}; break;
            }
            if (ranges[i].first <= ranges[i].second) {
                ++delta[ranges[i].first];
                --delta[ranges[i].second + 1];
            }
        }
        std::vector<std::size_t> counts(n_cand);
        long running = 0;
        for (std::size_t c = 0; c < n_cand; ++c) {
            running += delta[c];
            counts[c] = static_cast<std::size_t>(running);
        }
        const std::size_t local_min = *std::min_element(counts.begin(), counts.end());
        for (std::size_t c = 0; c < n_cand; ++c) {
            if (counts[c] != local_min) {
                continue;
            }
            Rational t = c % 2 == 0 ? breaks[c / 2] : Rational((breaks[c / 2] + breaks[c / 2 + 1]) / 2);
            Vector w = g0 * Rational(1 - t) + g1 * t;
            std::vector<bool> counted(n);
            for (std::size_t i = 0; i < n; ++i) {
                counted[i] = ranges[i].first <= c && c <= ranges[i].second;
            }
            tracker.offer(w, std::move(counted));
        }
    }
    return tracker.result();
}

/// Exact minimum over C+ by sampling every open cell of the arrangement
/// {w : w.(x_i - z) = 0} inside C+.
inline RankResult face_enumeration(std::span<const Vector> points, const PolyhedralCone& cone, const Vector& z)
{
    auto diffs = differences(points, z);
    MinTracker tracker(points.size());
    for (const auto& w : central_cell_samples(cone.dim(), diffs, cone.rays())) {
        tracker.offer(w, counted_set(diffs, w));
    }
    return tracker.result();
}

inline RankResult vertex_search(std::span<const Vector> points, const PolyhedralCone& cone, const Vector& z)
{
    auto diffs = differences(points, z);
    return VertexSearch(diffs, cone).run().result();
}

} // namespace detail

/// r_{X,C}(z) = min over w in C+ \ {0} of r_{X,w}(z), exactly.
inline RankResult rank_cone(std::span<const Vector> points, const PolyhedralCone& cone, const Vector& z,
                            RankMethod method = RankMethod::automatic)
{
    require(z.size() == cone.dim(), ErrorKind::validation, "point and cone dimensions differ");
    if (detail::check_ranking_cone(cone)) {
        return detail::rank_halfspace(points, cone.dual_rays().front(), z);
    }
    if (method == RankMethod::sweep || (method == RankMethod::automatic && cone.dim() == 2)) {
        return detail::sweep_2d(points, cone, z);
    }
    if (method == RankMethod::face_enumeration) {
        return detail::face_enumeration(points, cone, z);
    }
    return detail::vertex_search(points, cone, z);
}

inline RankResult rank_cone(const AlternativeSet& alternatives, const PolyhedralCone& cone, const Vector& z,
                            RankMethod method = RankMethod::automatic)
{
    return rank_cone(alternatives.points(), cone, z, method);
}

/// Upper bound on r_{X,C}(z): the minimum w-ranking over the dual rays (exact)
/// and `samples` random convex combinations of them (floating point).
inline std::size_t rank_cone_oracle(std::span<const Vector> points, const PolyhedralCone& cone, const Vector& z,
                                    std::size_t samples, std::uint64_t seed = default_seed)
{
    require(samples >= 1, ErrorKind::validation, "oracle needs at least one sample");
    require(z.size() == cone.dim(), ErrorKind::validation, "point and cone dimensions differ");
    cone.require_proper();
    const std::size_t d = cone.dim();
    const std::size_t n = points.size();

    std::vector<double> diffs;
    diffs.reserve(n * d);
    for (const auto& x : points) {
        require(x.size() == d, ErrorKind::validation, "alternative and point dimensions differ");
        for (std::size_t j = 0; j < d; ++j) {
            diffs.push_back(Rational(x[j] - z[j]).get_d());
        }
    }
    std::vector<std::vector<double>> rays;
    for (const auto& r : cone.dual_rays()) {
        auto v = r.to_doubles();
        double norm = 0;
        for (double c : v) {
            norm += c * c;
        }
        norm = std::sqrt(norm);
        for (double& c : v) {
            c /= norm;
        }
        rays.push_back(std::move(v));
    }

    auto count = [&](const std::vector<double>& w) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < d; ++j) {
                s += w[j] * diffs[i * d + j];
            }
            c += s <= 0;
        }
        return c;
    };

    // The rays themselves sit on arrangement hyperplanes often enough that a
    // rounded dot product would break ties the wrong way, so count them exactly.
    std::size_t best = n;
    for (const auto& r : cone.dual_rays()) {
        best = std::min(best, rank_w(points, r, z));
    }
    Rng rng(seed);
    std::vector<double> w(d);
    std::vector<double> coef(rays.size());
    for (std::size_t s = 0; s < samples && best > 0; ++s) {
        std::fill(w.begin(), w.end(), 0.0);
        for (std::size_t k = 0; k < rays.size(); ++k) {
            double e = rng.exponential();
            for (std::size_t j = 0; j < d; ++j) {
                w[j] += e * rays[k][j];
            }
        }
        best = std::min(best, count(w));
    }
    return best;
}

inline std::size_t rank_cone_oracle(const AlternativeSet& alternatives, const PolyhedralCone& cone, const Vector& z,
                                    std::size_t samples, std::uint64_t seed = default_seed)
{
    return rank_cone_oracle(alternatives.points(), cone, z, samples, seed);
}

/// rank_cone at every alternative, in input order.
inline std::vector<RankResult> rank_all(std::span<const Vector> points, const PolyhedralCone& cone,
                                        RankMethod method = RankMethod::automatic)
{
    detail::check_ranking_cone(cone);
    std::vector<RankResult> out;
    out.reserve(points.size());
    for (const auto& x : points) {
        out.push_back(rank_cone(points, cone, x, method));
    }
    return out;
}

inline std::vector<RankResult> rank_all(const AlternativeSet& alternatives, const PolyhedralCone& cone,
                                        RankMethod method = RankMethod::automatic)
{
    return rank_all(alternatives.points(), cone, method);
}

/// Just the values of rank_all.
inline std::vector<std::size_t> rank_values(std::span<const Vector> points, const PolyhedralCone& cone)
{
    std::vector<std::size_t> out;
    for (const auto& r : rank_all(points, cone)) {
        out.push_back(r.value);
    }
    return out;
}

} // namespace conerank
