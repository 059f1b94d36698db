#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "conerank/classify.hpp"
#include "conerank/error.hpp"
#include "conerank/random.hpp"
#include "conerank/vector.hpp"

namespace conerank {

enum class Sense { benefit, cost };

struct TopsisConfig {
    std::vector<double> weights;
    /// Empty means every criterion is a benefit.
    std::vector<Sense> senses;
};

/// Textbook TOPSIS: vector normalisation, weighting, Euclidean distances to the
/// ideal and anti-ideal points, closeness d- / (d+ + d-). Higher is better.
inline std::vector<double> topsis_rank(std::span<const Vector> points, const TopsisConfig& cfg)
{
    require(!points.empty(), ErrorKind::validation, "TOPSIS needs alternatives");
    const std::size_t d = points.front().size();
    require(cfg.weights.size() == d, ErrorKind::validation, "TOPSIS needs one weight per criterion");
    require(cfg.senses.empty() || cfg.senses.size() == d, ErrorKind::validation, "TOPSIS needs one sense per criterion");
    double total = 0;
    for (double w : cfg.weights) {
        require(std::isfinite(w) && w >= 0, ErrorKind::validation, "TOPSIS weights must be nonnegative");
        total += w;
    }
    require(std::abs(total - 1) < 1e-9, ErrorKind::validation, "TOPSIS weights must sum to 1");

    std::vector<std::vector<double>> v;
    for (const auto& p : points) {
        v.push_back(p.to_doubles());
    }
    std::vector<double> ideal(d);
    std::vector<double> anti(d);
    for (std::size_t j = 0; j < d; ++j) {
        double norm = 0;
        for (const auto& row : v) {
            norm += row[j] * row[j];
        }
        norm = std::sqrt(norm);
        require(norm > 0, ErrorKind::validation, "TOPSIS: criterion " + std::to_string(j + 1) + " is zero for every alternative");
        bool cost = !cfg.senses.empty() && cfg.senses[j] == Sense::cost;
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i][j] = cfg.weights[j] * v[i][j] / norm;
            if (i == 0 || (cost ? v[i][j] < ideal[j] : v[i][j] > ideal[j])) {
                ideal[j] = v[i][j];
            }
            if (i == 0 || (cost ? v[i][j] > anti[j] : v[i][j] < anti[j])) {
                anti[j] = v[i][j];
            }
        }
    }
    std::vector<double> out;
    for (const auto& row : v) {
        double plus = 0;
        double minus = 0;
        for (std::size_t j = 0; j < d; ++j) {
            plus += (row[j] - ideal[j]) * (row[j] - ideal[j]);
            minus += (row[j] - anti[j]) * (row[j] - anti[j]);
        }
        plus = std::sqrt(plus);
        minus = std::sqrt(minus);
        out.push_back(plus + minus == 0 ? 0.5 : minus / (plus + minus));
    }
    return out;
}

/// Plain weighted sums w.x, exact.
inline std::vector<Rational> weighted_sum_rank(std::span<const Vector> points, const Vector& w)
{
    require(!w.is_zero(), ErrorKind::validation, "weight vector must be nonzero");
    std::vector<Rational> out;
    for (const auto& p : points) {
        require(p.size() == w.size(), ErrorKind::validation, "weight and alternative dimensions differ");
        out.push_back(dot(w, p));
    }
    return out;
}

/// A synthetic student cohort: average mark on a 1 to 4 scale (higher is
/// better) and credit points out of 60, both driven by one latent ability,
/// plus a few students who trade one criterion for the other.
inline std::vector<Vector> student_cohort(std::size_t n, std::uint64_t seed = default_seed)
{
    Rng rng(seed);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i) {
        double ability = rng.normal();
        double mark = 2.6 + 0.5 * ability + 0.35 * rng.normal();
        double credits = 34 + 9 * ability + 7 * rng.normal();
        if (i % 12 == 11) {
            // Specialists: strong on one criterion, weak on the other.
            bool marks_first = rng.uniform() < 0.5;
            mark = marks_first ? 3.6 + 0.3 * rng.uniform() : 1.4 + 0.4 * rng.uniform();
            credits = marks_first ? 12 + 8 * rng.uniform() : 52 + 8 * rng.uniform();
        }
        mark = std::round(std::clamp(mark, 1.0, 4.0) * 10) / 10;
        credits = std::round(std::clamp(credits, 0.0, 60.0));
        out.push_back(Vector::from_doubles(std::vector<double>{mark, credits}));
    }
    return out;
}

struct LabeledCohort {
    std::vector<Vector> points;
    std::vector<Label> labels;
    /// Direction of the rule that produced the labels.
    std::vector<double> rule;
};

/// Two linearly separable classes in [0, 10]^2: acceptable above a random
/// line with positive normal, unacceptable below it, nothing inside the margin.
inline LabeledCohort separable_cohort(std::size_t n, double margin, std::uint64_t seed = default_seed)
{
    Rng rng(seed);
    LabeledCohort out;
    const double angle = rng.uniform(0.1, 1.47);
    out.rule = {std::cos(angle), std::sin(angle)};
    const double cut = 5 * (out.rule[0] + out.rule[1]);
    std::size_t n_pos = 0;
    while (out.points.size() < n || n_pos < 2 || out.points.size() - n_pos < 2) {
        double x = std::round(rng.uniform(0, 10) * 100) / 100;
        double y = std::round(rng.uniform(0, 10) * 100) / 100;
        double s = out.rule[0] * x + out.rule[1] * y - cut;
        if (std::abs(s) < margin) {
            continue;
        }
        out.points.push_back(Vector::from_doubles(std::vector<double>{x, y}));
        out.labels.push_back(s > 0 ? Label::acceptable : Label::unacceptable);
        n_pos += s > 0 ? 1 : 0;
    }
    return out;
}

} // namespace conerank
