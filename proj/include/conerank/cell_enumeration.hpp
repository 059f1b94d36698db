#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "conerank/geometry.hpp"
#include "conerank/linalg.hpp"
#include "conerank/vector.hpp"

// Sample points for every open cell of a hyperplane arrangement restricted to a
// polyhedral cone. A count of the form #{i : w.a_i <= 0} is upper
// semicontinuous in w, so its minimum over a full-dimensional cone is attained
// inside some open cell; one sample per cell therefore finds the exact minimum.
//
// The recursion alternates two problems:
//   central(m)  hyperplanes and constraints through the origin of R^m
//   affine(k)   affine hyperplanes inside a bounded polytope of R^k
// A central problem is sliced by c.w = 1 (c positive on the cone) into an
// affine one. Every open cell of the affine problem has a vertex in its
// closure; near that vertex the cell is a cell of the central problem formed
// by the items through the vertex, one dimension lower.
namespace conerank::detail {

struct AffineItem {
    Vector a;
    Rational b; // a.t + b
};

std::vector<Vector> central_cell_samples(std::size_t m, const std::vector<Vector>& hyperplanes,
                                         const std::vector<Vector>& constraints);

inline Rational cross2(const Vector& u, const Vector& v) { return u[0] * v[1] - u[1] * v[0]; }

inline int half_plane(const Vector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

inline bool angle_less(const Vector& u, const Vector& v)
{
    int hu = half_plane(u);
    int hv = half_plane(v);
    if (hu != hv) {
        return hu < hv;
    }
    return cross2(u, v) > 0;
}

inline bool strictly_inside(const Vector& s, const std::vector<Vector>& constraints)
{
    return std::all_of(constraints.begin(), constraints.end(), [&](const Vector& f) { return sgn(dot(f, s)) > 0; });
}

/// m = 2: sort boundary directions by angle and take one direction strictly
/// inside each angular sector.
inline std::vector<Vector> planar_cell_samples(const std::vector<Vector>& hyperplanes,
                                               const std::vector<Vector>& constraints)
{
    std::vector<Vector> dirs;
    auto add_line = [&](const Vector& n) {
        Vector p{-n[1], n[0]};
        dirs.push_back(normalized_l1(p));
        dirs.push_back(normalized_l1(-p));
    };
    for (const auto& h : hyperplanes) {
        add_line(h);
    }
    for (const auto& f : constraints) {
        add_line(f);
    }

    std::vector<Vector> samples;
    if (dirs.empty()) {
        samples.push_back(Vector{1, 0});
    } else {
        std::sort(dirs.begin(), dirs.end(), angle_less);
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const Vector& u = dirs[i];
            const Vector& v = dirs[(i + 1) % dirs.size()];
            if (dirs.size() > 1 && sgn(cross2(u, v)) > 0) {
                samples.push_back(u + v);
            } else {
                samples.push_back(Vector{-u[1], u[0]});
            }
        }
    }
    std::vector<Vector> out;
    for (auto& s : samples) {
        if (strictly_inside(s, constraints)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

inline std::vector<Vector> affine_cell_samples(std::size_t k, const std::vector<AffineItem>& hyperplanes,
                                               const std::vector<AffineItem>& constraints)
{
    std::vector<const AffineItem*> items;
    for (const auto& h : hyperplanes) {
        items.push_back(&h);
    }
    const std::size_t n_hyper = items.size();
    for (const auto& f : constraints) {
        items.push_back(&f);
    }

    auto feasible = [&](const Vector& t) {
        return std::all_of(constraints.begin(), constraints.end(),
                           [&](const AffineItem& f) { return sgn(dot(f.a, t) + f.b) >= 0; });
    };

    std::vector<Vector> vertices;
    for_each_subset(items.size(), k, [&](const std::vector<std::size_t>& subset) {
        std::vector<Vector> rows;
        Vector rhs(k);
        for (std::size_t r = 0; r < k; ++r) {
            rows.push_back(items[subset[r]]->a);
            rhs[r] = -items[subset[r]]->b;
        }
        auto v = solve(std::move(rows), std::move(rhs));
        if (v && feasible(*v)) {
            vertices.push_back(std::move(*v));
        }
    });
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    std::vector<Vector> samples;
    std::vector<Rational> values(items.size());
    for (const auto& v : vertices) {
        std::vector<Vector> local_hyper;
        std::vector<Vector> local_cons;
        for (std::size_t i = 0; i < items.size(); ++i) {
            values[i] = dot(items[i]->a, v) + items[i]->b;
            if (values[i] == 0) {
                (i < n_hyper ? local_hyper : local_cons).push_back(items[i]->a);
            }
        }
        for (const auto& u : central_cell_samples(k, local_hyper, local_cons)) {
            // Step size that keeps every item not through v on its current side.
            bool bounded = false;
            Rational step;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (values[i] == 0) {
                    continue;
                }
                Rational slope = dot(items[i]->a, u);
                if (sgn(slope) * sgn(values[i]) < 0) {
                    Rational limit = -values[i] / slope;
                    if (!bounded || limit < step) {
                        step = limit;
                        bounded = true;
                    }
                }
            }
            step = bounded ? Rational(step / 2) : Rational(1);
            samples.push_back(v + u * step);
        }
    }
    return samples;
}

/// Slices the central problem by c.w = 1, where c.w > 0 on the constraint cone minus the origin.
inline std::vector<Vector> sliced_cell_samples(std::size_t m, const std::vector<Vector>& hyperplanes,
                                               const std::vector<Vector>& constraints, const Vector& c)
{
    std::size_t p = 0;
    while (c[p] == 0) {
        ++p;
    }
    // w = w0 + sum_{j != p} t_j b_j with w0 = e_p / c_p and b_j = e_j - (c_j / c_p) e_p.
    auto restrict_item = [&](const Vector& h) {
        AffineItem item{Vector(m - 1), h[p] / c[p]};
        std::size_t col = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j != p) {
                item.a[col++] = h[j] - c[j] * h[p] / c[p];
            }
        }
        return item;
    };

    std::vector<AffineItem> hyper;
    for (const auto& h : hyperplanes) {
        auto item = restrict_item(h);
        if (!item.a.is_zero()) {
            hyper.push_back(std::move(item));
        }
    }
    std::vector<AffineItem> cons;
    for (const auto& f : constraints) {
        auto item = restrict_item(f);
        if (item.a.is_zero()) {
            if (item.b < 0) {
                return {};
            }
            continue;
        }
        cons.push_back(std::move(item));
    }

    std::vector<Vector> out;
    for (const auto& t : affine_cell_samples(m - 1, hyper, cons)) {
        Vector w(m);
        Rational rest = 1;
        std::size_t col = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j != p) {
                w[j] = t[col++];
                rest -= c[j] * w[j];
            }
        }
        w[p] = rest / c[p];
        out.push_back(std::move(w));
    }
    return out;
}

/// Hyperplanes are deduplicated up to sign; constraints up to positive scaling.
inline std::vector<Vector> canonical_hyperplanes(const std::vector<Vector>& hyperplanes)
{
    std::vector<Vector> hs;
    for (const auto& h : hyperplanes) {
        if (h.is_zero()) {
            continue;
        }
        Vector n = normalized_l1(h);
        auto first = std::find_if(n.begin(), n.end(), [](const Rational& q) { return q != 0; });
        if (*first < 0) {
            n = -n;
        }
        hs.push_back(std::move(n));
    }
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return hs;
}

inline std::vector<Vector> central_cell_samples(std::size_t m, const std::vector<Vector>& hyperplanes,
                                                const std::vector<Vector>& constraints)
{
    const std::vector<Vector> hyper = canonical_hyperplanes(hyperplanes);
    const std::vector<Vector> cons = canonical_directions(constraints);

    if (m == 1) {
        bool up = std::all_of(cons.begin(), cons.end(), [](const Vector& f) { return f[0] > 0; });
        bool down = std::all_of(cons.begin(), cons.end(), [](const Vector& f) { return f[0] < 0; });
        std::vector<Vector> out;
        if (up) {
            out.push_back(Vector{1});
        }
        if (down) {
            out.push_back(Vector{-1});
        }
        return out;
    }
    if (m == 2) {
        return planar_cell_samples(hyper, cons);
    }

    auto positive_combination = [](const std::vector<Vector>& fs, std::size_t dim) {
        Vector c(dim);
        for (const auto& f : fs) {
            c += f;
        }
        return c;
    };

    if (!cons.empty() && rank_of(cons, m) == m) {
        return sliced_cell_samples(m, hyper, cons, positive_combination(cons, m));
    }

    // The cone contains a line: split it into orthants, each of which is pointed.
    std::vector<Vector> out;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        std::vector<Vector> orthant = cons;
        for (std::size_t j = 0; j < m; ++j) {
            orthant.push_back(Vector::unit(m, j, (mask >> j) & 1UL ? -1 : 1));
        }
        for (auto& w : sliced_cell_samples(m, hyper, orthant, positive_combination(orthant, m))) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

} // namespace conerank::detail
