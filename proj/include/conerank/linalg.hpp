#pragma once

#include <optional>
#include <vector>

#include "conerank/vector.hpp"

// Exact dense linear algebra over the rationals, sized for d <= 6.
namespace conerank::detail {

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
inline std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        Rational inv = Rational(1) / rows[r][c];
        rows[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c] != 0) {
                Rational f = rows[i][c];
                for (std::size_t k = c; k < cols; ++k) {
                    rows[i][k] -= f * rows[r][k];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline std::size_t rank_of(std::vector<Vector> rows, std::size_t cols) { return rref(rows, cols).size(); }

/// Basis of {x : row . x = 0 for every row}.
inline std::vector<Vector> nullspace(std::vector<Vector> rows, std::size_t cols)
{
    auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -rows[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution of A x = b for square A, or nullopt when A is singular.
inline std::optional<Vector> solve(std::vector<Vector> a, Vector b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            swap(b[p], b[c]);
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) {
                continue;
            }
            Rational f = a[i][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) {
                a[i][k] -= f * a[c][k];
            }
            b[i] -= f * b[c];
        }
    }
    Vector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            s -= a[i][k] * x[k];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace conerank::detail
