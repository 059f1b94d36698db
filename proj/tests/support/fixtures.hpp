#pragma once

// Hand-built instances with known ranks, shared by unit and acceptance tests.

#include <vector>

#include "conerank/vector.hpp"

namespace conerank::testkit {

/// Three incomparable points whose ranks are all 1.
inline std::vector<Vector> black_points() { return {Vector{0, 4}, vec({1.5, 1.5}), Vector{4, 0}}; }

/// Points below the middle black point only; they lift its rank to 4.
inline std::vector<Vector> yellow_points() { return {vec({1.4, 0.3}), vec({1.0, 0.8}), vec({0.3, 1.4})}; }

inline std::vector<Vector> black_and_yellow()
{
    auto pts = black_points();
    for (const auto& p : yellow_points()) {
        pts.push_back(p);
    }
    return pts;
}

/// x = (1,0), y = (0,2), p = (-1,1): ranks 1, 2, 1 under the orthant.
inline std::vector<Vector> reversal_base() { return {Vector{1, 0}, Vector{0, 2}, Vector{-1, 1}}; }

/// Five points below x and incomparable to y: (0.9 - k/10, -k/10), k = 1..5.
inline std::vector<Vector> reversal_additions()
{
    std::vector<Vector> out;
    for (int k = 1; k <= 5; ++k) {
        out.push_back(Vector{Rational(9 - k, 10), Rational(-k, 10)});
        out.back()[0].canonicalize();
        out.back()[1].canonicalize();
    }
    return out;
}

/// Three points on a line of slope -1; the middle one is ranked 2.
inline std::vector<Vector> diagonal_triple() { return {Vector{0, 4}, Vector{2, 2}, Vector{4, 0}}; }

/// Four points on the lower-left convex frontier: an antichain with all ranks 1.
inline std::vector<Vector> convex_antichain() { return {Vector{0, 6}, Vector{1, 2}, Vector{2, 1}, Vector{6, 0}}; }

inline std::vector<Vector> chain(int n)
{
    std::vector<Vector> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(Vector{i, i});
    }
    return out;
}

} // namespace conerank::testkit
