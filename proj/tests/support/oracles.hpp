#pragma once

// Test-only oracles. Nothing here calls into the evaluators under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstddef>
#include <vector>

#include "support/printing.hpp"
#include "conerank/linalg.hpp"
#include "conerank/vector.hpp"

namespace conerank::testkit {

/// Vertices of {w : sum w = 1, lo <= w <= hi} by brute force over every
/// (d-1)-subset of the 2d box constraints, each solved with the sum equation.
inline std::vector<Vector> box_simplex_vertices(const std::vector<Rational>& lo, const std::vector<Rational>& hi)
{
    const std::size_t d = lo.size();
    std::vector<Vector> found;
    const std::size_t n_cons = 2 * d;
    std::vector<std::size_t> pick(d - 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == d - 1) {
            std::vector<Vector> rows;
            Vector rhs(d);
            Vector ones(d);
            for (std::size_t j = 0; j < d; ++j) {
                ones[j] = 1;
            }
            rows.push_back(ones);
            rhs[0] = 1;
            for (std::size_t r = 0; r < d - 1; ++r) {
                std::size_t c = pick[r];
                rows.push_back(Vector::unit(d, c % d));
                rhs[r + 1] = c < d ? lo[c % d] : hi[c % d];
            }
            auto sol = detail::solve(rows, rhs);
            if (!sol) {
                return;
            }
            for (std::size_t j = 0; j < d; ++j) {
                if ((*sol)[j] < lo[j] || (*sol)[j] > hi[j]) {
                    return;
                }
            }
            found.push_back(*sol);
            return;
        }
        for (std::size_t c = start; c < n_cons; ++c) {
            pick[depth] = c;
            rec(c + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

/// Brute-force minimum of #{x : w.x <= w.z} over a dense grid of angles in
/// the planar wedge between two weight directions. Floating point; only
/// suitable for well-separated small-integer instances.
inline std::size_t planar_grid_rank(const std::vector<std::vector<double>>& xs, const std::vector<double>& z,
                                    double theta_lo, double theta_hi, std::size_t steps)
{
    std::size_t best = xs.size();
    for (std::size_t s = 0; s <= steps; ++s) {
        double th = theta_lo + (theta_hi - theta_lo) * static_cast<double>(s) / static_cast<double>(steps);
        double w0 = std::cos(th);
        double w1 = std::sin(th);
        std::size_t c = 0;
        for (const auto& x : xs) {
            c += w0 * (x[0] - z[0]) + w1 * (x[1] - z[1]) <= 1e-12;
        }
        best = std::min(best, c);
    }
    return best;
}

} // namespace conerank::testkit
