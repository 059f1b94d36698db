#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "conerank/error.hpp"
#include "conerank/geometry.hpp"
#include "conerank/linalg.hpp"
#include "conerank/vector.hpp"

// Hard-margin linear SVM normal. The maximum-margin hyperplane is the
// perpendicular bisector of the closest pair between the two convex hulls,
// so its normal is p - q for that pair; the bias is not needed here.
namespace conerank {

namespace detail {

/// Closest pair between aff(sa) and aff(sb) as barycentric weights, or
/// nothing when the supports are affinely dependent.
inline std::optional<std::pair<Vector, Vector>> affine_closest_pair(const std::vector<const Vector*>& sa,
                                                                    const std::vector<const Vector*>& sb)
{
    const std::size_t k = sa.size();
    const std::size_t m = sb.size();
    const std::size_t n = k + m;
    // Unknowns (lambda, mu); w = sum lambda a - sum mu b.
    auto w_dot = [&](const Vector& dir) {
        Vector row(n);
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = dot(*sa[i], dir);
        }
        for (std::size_t j = 0; j < m; ++j) {
            row[k + j] = -dot(*sb[j], dir);
        }
        return row;
    };
    std::vector<Vector> rows;
    Vector rhs(n);
    Vector ones_a(n);
    Vector ones_b(n);
    for (std::size_t i = 0; i < k; ++i) {
        ones_a[i] = 1;
    }
    for (std::size_t j = 0; j < m; ++j) {
        ones_b[k + j] = 1;
    }
    rows.push_back(ones_a);
    rhs[0] = 1;
    rows.push_back(ones_b);
    rhs[1] = 1;
    for (std::size_t i = 1; i < k; ++i) {
        rows.push_back(w_dot(*sa[i] - *sa[0]));
    }
    for (std::size_t j = 1; j < m; ++j) {
        rows.push_back(w_dot(*sb[j] - *sb[0]));
    }
    auto sol = solve(std::move(rows), std::move(rhs));
    if (!sol) {
        return std::nullopt;
    }
    Vector p(sa[0]->size());
    Vector q(sa[0]->size());
    for (std::size_t i = 0; i < k; ++i) {
        if ((*sol)[i] < 0) {
            return std::nullopt;
        }
        p += *sa[i] * (*sol)[i];
    }
    for (std::size_t j = 0; j < m; ++j) {
        if ((*sol)[k + j] < 0) {
            return std::nullopt;
        }
        q += *sb[j] * (*sol)[k + j];
    }
    return std::make_pair(std::move(p), std::move(q));
}

/// Exhaustive search over support sets of total size at most d + 1.
inline std::optional<Vector> svm_normal_exact(std::span<const Vector> pos, std::span<const Vector> neg)
{
    const std::size_t d = pos.front().size();
    for (std::size_t total = 2; total <= d + 1; ++total) {
        for (std::size_t k = 1; k < total; ++k) {
            const std::size_t m = total - k;
            if (k > pos.size() || m > neg.size()) {
                continue;
            }
            std::optional<Vector> found;
            for_each_subset(pos.size(), k, [&](const std::vector<std::size_t>& ia) {
                if (found) {
                    return;
                }
                std::vector<const Vector*> sa;
                for (std::size_t i : ia) {
                    sa.push_back(&pos[i]);
                }
                for_each_subset(neg.size(), m, [&](const std::vector<std::size_t>& ib) {
                    if (found) {
                        return;
                    }
                    std::vector<const Vector*> sb;
                    for (std::size_t j : ib) {
                        sb.push_back(&neg[j]);
                    }
                    auto pair = affine_closest_pair(sa, sb);
                    if (!pair) {
                        return;
                    }
                    Vector w = pair->first - pair->second;
                    if (w.is_zero()) {
                        return;
                    }
                    Rational top = dot(w, pair->first);
                    Rational bottom = dot(w, pair->second);
                    for (const auto& a : pos) {
                        if (dot(w, a) < top) {
                            return;
                        }
                    }
                    for (const auto& b : neg) {
                        if (dot(w, b) > bottom) {
                            return;
                        }
                    }
                    found = std::move(w);
                });
            });
            if (found) {
                return found;
            }
        }
    }
    return std::nullopt;
}

/// Gilbert's nearest-point iteration on the difference polytope conv(pos) - conv(neg).
inline std::optional<Vector> svm_normal_iterative(std::span<const Vector> pos, std::span<const Vector> neg,
                                                  std::size_t max_iter = 200000)
{
    const std::size_t d = pos.front().size();
    std::vector<std::vector<double>> a;
    std::vector<std::vector<double>> b;
    for (const auto& p : pos) {
        a.push_back(p.to_doubles());
    }
    for (const auto& q : neg) {
        b.push_back(q.to_doubles());
    }
    auto dotd = [&](const std::vector<double>& u, const std::vector<double>& v) {
        double s = 0;
        for (std::size_t j = 0; j < d; ++j) {
            s += u[j] * v[j];
        }
        return s;
    };
    std::vector<double> x(d);
    for (std::size_t j = 0; j < d; ++j) {
        x[j] = a[0][j] - b[0][j];
    }
    std::vector<double> s(d);
    for (std::size_t it = 0; it < max_iter; ++it) {
        std::size_t ia = 0;
        std::size_t ib = 0;
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (dotd(x, a[i]) < dotd(x, a[ia])) {
                ia = i;
            }
        }
        for (std::size_t j = 1; j < b.size(); ++j) {
            if (dotd(x, b[j]) > dotd(x, b[ib])) {
                ib = j;
            }
        }
        for (std::size_t j = 0; j < d; ++j) {
            s[j] = a[ia][j] - b[ib][j];
        }
        double xx = dotd(x, x);
        double xs = dotd(x, s);
        if (xx == 0) {
            return std::nullopt; // origin reached: hulls touch
        }
        if (xx - xs <= 1e-12 * xx) {
            break;
        }
        // Closest point to the origin on the segment [x, s].
        std::vector<double> diff(d);
        for (std::size_t j = 0; j < d; ++j) {
            diff[j] = x[j] - s[j];
        }
        double t = (xx - xs) / dotd(diff, diff);
        t = std::min(1.0, std::max(0.0, t));
        for (std::size_t j = 0; j < d; ++j) {
            x[j] -= t * diff[j];
        }
    }
    return Vector::from_doubles(x);
}

} // namespace detail

/// Normal of the maximum-margin hyperplane separating `pos` from `neg`,
/// oriented towards `pos`. Exact for d <= 3.
inline Vector svm_normal(std::span<const Vector> pos, std::span<const Vector> neg)
{
    require(!pos.empty() && !neg.empty(), ErrorKind::validation, "SVM needs both acceptable and unacceptable examples");
    const std::size_t d = pos.front().size();
    std::optional<Vector> w = d <= 3 ? detail::svm_normal_exact(pos, neg) : detail::svm_normal_iterative(pos, neg);
    require(w.has_value(), ErrorKind::precondition, "the two classes are not linearly separable");
    // The iterative result must still separate strictly.
    Rational lo = dot(*w, pos.front());
    Rational hi = dot(*w, neg.front());
    for (const auto& a : pos) {
        lo = std::min(lo, Rational(dot(*w, a)));
    }
    for (const auto& b : neg) {
        hi = std::max(hi, Rational(dot(*w, b)));
    }
    require(lo > hi, ErrorKind::precondition, "the two classes are not linearly separable");
    return *w;
}

} // namespace conerank
