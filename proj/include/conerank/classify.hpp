#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "conerank/geometry.hpp"
#include "conerank/ranking.hpp"
#include "conerank/svm.hpp"

namespace conerank {

enum class Label { unlabeled, acceptable, unacceptable };

/// z in L_{X,C}(n), i.e. r_{X,C}(z) >= n.
inline bool level_member(std::span<const Vector> points, const PolyhedralCone& cone, std::size_t n, const Vector& z)
{
    return n == 0 || rank_cone(points, cone, z).value >= n;
}

struct AlphaBest {
    std::size_t n = 0;
    std::vector<std::size_t> members;
};

/// Largest n with #{x in X : r(x) >= n} >= N alpha / 100, from precomputed ranks.
inline AlphaBest alpha_best_from_ranks(const std::vector<std::size_t>& ranks, const Rational& alpha)
{
    require(alpha > 0 && alpha <= 100, ErrorKind::validation, "alpha must lie in (0, 100]");
    const Rational needed = Rational(static_cast<unsigned long>(ranks.size())) * alpha / 100;
    AlphaBest out;
    for (std::size_t n = 0; n <= ranks.size(); ++n) {
        auto count = static_cast<unsigned long>(std::count_if(ranks.begin(), ranks.end(), [&](std::size_t r) { return r >= n; }));
        if (Rational(count) >= needed) {
            out.n = n;
        }
    }
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] >= out.n) {
            out.members.push_back(i);
        }
    }
    return out;
}

inline AlphaBest alpha_best(std::span<const Vector> points, const PolyhedralCone& cone, const Rational& alpha)
{
    return alpha_best_from_ranks(rank_values(points, cone), alpha);
}

struct GoodBadUgly {
    std::size_t threshold = 0;
    std::vector<std::size_t> ranks;
    /// Ranks with respect to -C.
    std::vector<std::size_t> reverse_ranks;
    std::vector<std::size_t> good;
    std::vector<std::size_t> bad;
    std::vector<std::size_t> ugly;
    /// Points that met both thresholds; they are listed under ugly.
    std::vector<std::size_t> overlap;
};

/// Strictly more than half of the set: floor(N/2) + 1.
inline std::size_t majority_threshold(std::size_t n) { return n / 2 + 1; }

inline GoodBadUgly cluster_gbu(std::span<const Vector> points, const PolyhedralCone& cone)
{
    cone.require_proper();
    require(cone.is_pointed(), ErrorKind::precondition, "good/bad/ugly clustering requires a pointed cone");
    GoodBadUgly out;
    out.threshold = majority_threshold(points.size());
    out.ranks = rank_values(points, cone);
    out.reverse_ranks = rank_values(points, cone.negated());
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool good = out.ranks[i] >= out.threshold;
        bool bad = out.reverse_ranks[i] >= out.threshold;
        if (good && bad) {
            out.overlap.push_back(i);
            out.ugly.push_back(i);
        } else if (good) {
            out.good.push_back(i);
        } else if (bad) {
            out.bad.push_back(i);
        } else {
            out.ugly.push_back(i);
        }
    }
    return out;
}

struct ThresholdModel {
    std::size_t n = 0;
    std::size_t errors = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    std::size_t labeled = 0;
    /// errors / labeled
    Rational error_rate;
    /// Error count for every n in 0..N+1, the full scan behind the choice.
    std::vector<std::size_t> scan;
};

/// Threshold n minimising false positives plus false negatives of
/// "acceptable iff rank >= n" over the labeled points; ties go to the smallest n.
inline ThresholdModel fit_threshold_from_ranks(const std::vector<std::size_t>& ranks, const std::vector<Label>& labels)
{
    require(ranks.size() == labels.size(), ErrorKind::validation, "one label per alternative expected");
    ThresholdModel m;
    m.labeled = static_cast<std::size_t>(
        std::count_if(labels.begin(), labels.end(), [](Label l) { return l != Label::unlabeled; }));
    require(m.labeled > 0, ErrorKind::validation, "threshold fitting needs at least one labeled alternative");
    bool first = true;
    for (std::size_t n = 0; n <= ranks.size() + 1; ++n) {
        std::size_t fp = 0;
        std::size_t fn = 0;
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            bool predicted = ranks[i] >= n;
            fp += (predicted && labels[i] == Label::unacceptable) ? 1 : 0;
            fn += (!predicted && labels[i] == Label::acceptable) ? 1 : 0;
        }
        m.scan.push_back(fp + fn);
        if (first || fp + fn < m.errors) {
            first = false;
            m.n = n;
            m.errors = fp + fn;
            m.false_positives = fp;
            m.false_negatives = fn;
        }
    }
    m.error_rate = Rational(static_cast<unsigned long>(m.errors)) / static_cast<unsigned long>(m.labeled);
    m.error_rate.canonicalize();
    return m;
}

inline ThresholdModel fit_threshold(std::span<const Vector> points, const std::vector<Label>& labels,
                                    const PolyhedralCone& cone)
{
    return fit_threshold_from_ranks(rank_values(points, cone), labels);
}

struct Propagation {
    std::vector<Label> labels;
    std::vector<std::size_t> newly_labeled;
    /// Unlabeled points above an acceptable one and below an unacceptable one.
    std::vector<std::size_t> conflicts;
};

/// One pass over the order: transitivity makes a second pass a no-op.
inline Propagation propagate_labels(std::span<const Vector> points, const std::vector<Label>& labels,
                                    const PolyhedralCone& cone)
{
    require(points.size() == labels.size(), ErrorKind::validation, "one label per alternative expected");
    Propagation out;
    out.labels = labels;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (labels[i] != Label::unlabeled) {
            continue;
        }
        bool up = false;
        bool down = false;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (labels[j] == Label::acceptable && leq_cone(cone, points[j], points[i])) {
                up = true;
            }
            if (labels[j] == Label::unacceptable && leq_cone(cone, points[i], points[j])) {
                down = true;
            }
        }
        if (up && down) {
            out.conflicts.push_back(i);
        } else if (up || down) {
            out.labels[i] = up ? Label::acceptable : Label::unacceptable;
            out.newly_labeled.push_back(i);
        }
    }
    return out;
}

struct Alignment {
    PolyhedralCone cone;
    Vector w_svm;
    /// Mean of the unit-length dual rays, before rotation (floating point).
    std::vector<double> w_int;
    /// Rotation angle in radians.
    double angle = 0;
};

namespace detail {

inline std::vector<double> unit(std::vector<double> v)
{
    double n = 0;
    for (double c : v) {
        n += c * c;
    }
    n = std::sqrt(n);
    for (double& c : v) {
        c /= n;
    }
    return v;
}

inline double dotd(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace detail

/// Rotates C+ in the plane of w_int and w_SVM so that its centre direction
/// w_int lands on the SVM normal; the complement of that plane is fixed.
inline Alignment align_cone_svm(std::span<const Vector> points, const std::vector<Label>& labels,
                                const PolyhedralCone& cone)
{
    require(points.size() == labels.size(), ErrorKind::validation, "one label per alternative expected");
    cone.require_proper();
    std::vector<Vector> pos;
    std::vector<Vector> neg;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (labels[i] == Label::acceptable) {
            pos.push_back(points[i]);
        } else if (labels[i] == Label::unacceptable) {
            neg.push_back(points[i]);
        }
    }
    const std::size_t d = cone.dim();
    Alignment out{cone, svm_normal(pos, neg), std::vector<double>(d), 0.0};

    std::vector<std::vector<double>> rays;
    for (const auto& r : cone.dual_rays()) {
        rays.push_back(detail::unit(r.to_doubles()));
        for (std::size_t j = 0; j < d; ++j) {
            out.w_int[j] += rays.back()[j] / static_cast<double>(cone.dual_rays().size());
        }
    }
    auto u = detail::unit(out.w_int);
    auto target = detail::unit(out.w_svm.to_doubles());
    double c = std::clamp(detail::dotd(u, target), -1.0, 1.0);
    std::vector<double> v(d);
    for (std::size_t j = 0; j < d; ++j) {
        v[j] = target[j] - c * u[j];
    }
    double s = std::sqrt(std::max(0.0, detail::dotd(v, v)));
    require(!(s < 1e-12 && c < 0), ErrorKind::precondition,
            "the SVM normal points opposite to the cone centre; the rotation plane is undefined");
    if (s < 1e-12) {
        return out; // already aligned
    }
    for (double& x : v) {
        x /= s;
    }
    out.angle = std::atan2(s, c);

    std::vector<Vector> rotated;
    for (const auto& r : rays) {
        double ru = detail::dotd(r, u);
        double rv = detail::dotd(r, v);
        std::vector<double> y(r);
        for (std::size_t j = 0; j < d; ++j) {
            y[j] += (c - 1) * (ru * u[j] + rv * v[j]) + s * (ru * v[j] - rv * u[j]);
        }
        rotated.push_back(Vector::from_doubles(y));
    }
    out.cone = PolyhedralCone::from_dual_rays(std::move(rotated), d);
    return out;
}

} // namespace conerank
