#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "conerank/cell_enumeration.hpp"
#include "conerank/geometry.hpp"
#include "conerank/linalg.hpp"
#include "conerank/rank_result.hpp"

// Exact minimum of #{i : w.a_i <= 0} over a pointed polyhedral cone of weights.
//
// Every open cell of the arrangement {w.a_i = 0} inside the cone has an extreme
// ray v in its closure, cut out by d-1 hyperplanes or facets. Items strictly
// negative at v stay negative in every adjacent cell, and each hyperplane
// through v costs at least the smaller of its two sides, which gives a lower
// bound per vertex. Only vertices whose bound does not exceed the incumbent
// are resolved exactly.
//
// Signs are first evaluated in double precision with a forward error bound on
// the cofactor expansion; anything inside the bound is redone in rationals.
namespace conerank::detail {

/// Diffs that are positive multiples of h (`pos`) or negative ones (`neg`).
struct SignedHyperplane {
    Vector h;
    std::size_t pos = 0;
    std::size_t neg = 0;

    std::size_t cost(int side) const { return side > 0 ? neg : side < 0 ? pos : pos + neg; }
    std::size_t least() const { return std::min(pos, neg); }
};

inline std::vector<SignedHyperplane> group_hyperplanes(const std::vector<Vector>& diffs)
{
    std::map<Vector, std::size_t> index;
    std::vector<SignedHyperplane> out;
    for (const auto& a : diffs) {
        if (a.is_zero()) {
            continue;
        }
        Vector n = normalized_l1(a);
        auto first = std::find_if(n.begin(), n.end(), [](const Rational& q) { return q != 0; });
        bool flipped = *first < 0;
        if (flipped) {
            n = -n;
        }
        auto [it, inserted] = index.emplace(n, out.size());
        if (inserted) {
            out.push_back({n, 0, 0});
        }
        (flipped ? out[it->second].neg : out[it->second].pos) += 1;
    }
    return out;
}

/// Cofactor of rows[first..] restricted to `cols`, with the matching sum of
/// absolute products (the permanent of |M|) used as an error scale.
struct ApproxValue {
    double value = 0;
    double magnitude = 0;
};

inline ApproxValue approx_minor(const std::vector<const double*>& rows, std::size_t first, std::vector<std::size_t>& cols)
{
    if (cols.empty()) {
        return {1.0, 1.0};
    }
    if (cols.size() == 1) {
        double a = rows[first][cols[0]];
        return {a, std::abs(a)};
    }
    ApproxValue acc;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::size_t c = cols[i];
        double a = rows[first][c];
        if (a == 0) {
            continue;
        }
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
        ApproxValue sub = approx_minor(rows, first + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
        acc.value += (i % 2 ? -a : a) * sub.value;
        acc.magnitude += std::abs(a) * sub.magnitude;
    }
    return acc;
}

inline Rational exact_minor(const std::vector<const Vector*>& rows, std::size_t first, std::vector<std::size_t>& cols)
{
    if (cols.empty()) {
        return 1;
    }
    Rational acc = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::size_t c = cols[i];
        const Rational& a = (*rows[first])[c];
        if (a == 0) {
            continue;
        }
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
        Rational sub = exact_minor(rows, first + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
        if (i % 2) {
            acc -= a * sub;
        } else {
            acc += a * sub;
        }
    }
    return acc;
}

class VertexSearch {
public:
    VertexSearch(const std::vector<Vector>& diffs, const PolyhedralCone& cone)
        : d_(cone.dim()), diffs_(diffs), hyper_(group_hyperplanes(diffs))
    {
        for (const auto& a : diffs_) {
            zero_count_ += a.is_zero() ? 1 : 0;
        }
        // A constant factor well above the accumulated rounding of a d x d
        // cofactor expansion with inputs rounded once (get_d truncates).
        tolerance_ = 4.0 * static_cast<double>(d_ * d_ + 2 * d_ + 4) * std::numeric_limits<double>::epsilon();

        std::vector<Vector> rays = canonical_directions(cone.rays());
        if (rank_of(rays, d_) == d_) {
            pieces_.push_back(rays);
        } else {
            // C+ contains a line. Split it into orthant pieces, each pointed.
            for (unsigned long mask = 0; mask < (1UL << d_); ++mask) {
                std::vector<Vector> piece = rays;
                for (std::size_t j = 0; j < d_; ++j) {
                    piece.push_back(Vector::unit(d_, j, (mask >> j) & 1UL ? -1 : 1));
                }
                pieces_.push_back(canonical_directions(std::move(piece)));
            }
        }
        for (const auto& w : cone.dual_rays()) {
            bound_ = std::min(bound_, exact_count(w));
        }
    }

    MinTracker run()
    {
        MinTracker tracker(diffs_.size());
        for (const auto& piece : pieces_) {
            visited_.clear();
            search_piece(piece, tracker);
        }
        return tracker;
    }

private:
    std::size_t exact_count(const Vector& w) const
    {
        std::size_t c = 0;
        for (const auto& a : diffs_) {
            c += sgn(dot(w, a)) <= 0 ? 1 : 0;
        }
        return c;
    }

    void search_piece(const std::vector<Vector>& constraints, MinTracker& tracker)
    {
        const std::size_t n_hyper = hyper_.size();
        std::vector<const Vector*> items;
        for (const auto& h : hyper_) {
            items.push_back(&h.h);
        }
        for (const auto& f : constraints) {
            items.push_back(&f);
        }
        std::vector<double> approx(items.size() * d_);
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = 0; j < d_; ++j) {
                approx[i * d_ + j] = (*items[i])[j].get_d();
            }
        }

        std::vector<double> v(d_);
        std::vector<double> vmag(d_);
        std::vector<const double*> rows(d_ - 1);
        std::vector<const Vector*> exact_rows(d_ - 1);
        std::vector<std::size_t> cols;
        std::vector<int> side(items.size());
        std::vector<char> in_subset(items.size(), 0);

        for_each_subset(items.size(), d_ - 1, [&](const std::vector<std::size_t>& subset) {
            for (std::size_t r = 0; r < subset.size(); ++r) {
                rows[r] = &approx[subset[r] * d_];
                exact_rows[r] = items[subset[r]];
            }
            bool finite = true;
            for (std::size_t j = 0; j < d_; ++j) {
                cols.clear();
                for (std::size_t c = 0; c < d_; ++c) {
                    if (c != j) {
                        cols.push_back(c);
                    }
                }
                ApproxValue m = approx_minor(rows, 0, cols);
                v[j] = j % 2 ? -m.value : m.value;
                vmag[j] = m.magnitude;
                finite = finite && std::isfinite(m.value) && std::isfinite(m.magnitude);
            }

            std::optional<Vector> vx;
            auto exact_v = [&]() -> const Vector& {
                if (!vx) {
                    vx.emplace(d_);
                    for (std::size_t j = 0; j < d_; ++j) {
                        cols.clear();
                        for (std::size_t c = 0; c < d_; ++c) {
                            if (c != j) {
                                cols.push_back(c);
                            }
                        }
                        Rational m = exact_minor(exact_rows, 0, cols);
                        (*vx)[j] = j % 2 ? Rational(-m) : m;
                    }
                }
                return *vx;
            };
            auto sign_of = [&](std::size_t item) {
                if (finite) {
                    const double* a = &approx[item * d_];
                    double s = 0;
                    double mag = 0;
                    for (std::size_t j = 0; j < d_; ++j) {
                        s += a[j] * v[j];
                        mag += std::abs(a[j]) * vmag[j];
                    }
                    if (std::isfinite(mag) && std::abs(s) > tolerance_ * mag) {
                        return s > 0 ? 1 : -1;
                    }
                }
                return sgn(dot(*items[item], exact_v()));
            };

            for (std::size_t idx : subset) {
                in_subset[idx] = 1;
            }
            struct Reset {
                std::vector<char>& flags;
                const std::vector<std::size_t>& subset;
                ~Reset()
                {
                    for (std::size_t idx : subset) {
                        flags[idx] = 0;
                    }
                }
            } reset{in_subset, subset};

            // Orientation: the ray must satisfy every constraint of the piece.
            int orientation = 0;
            for (std::size_t i = n_hyper; i < items.size(); ++i) {
                int s = in_subset[i] ? 0 : sign_of(i);
                side[i] = s;
                if (s == 0) {
                    continue;
                }
                if (orientation == 0) {
                    orientation = s;
                } else if (s != orientation) {
                    return;
                }
            }
            if (orientation == 0) {
                return; // the subset is dependent, or the piece is degenerate
            }

            std::size_t lower = zero_count_;
            for (std::size_t k = 0; k < n_hyper; ++k) {
                int s = in_subset[k] ? 0 : orientation * sign_of(k);
                side[k] = s;
                lower += s == 0 ? hyper_[k].least() : hyper_[k].cost(s);
                if (lower > bound_) {
                    return;
                }
            }
            Vector ray = exact_v();
            if (ray.is_zero()) {
                return;
            }
            if (orientation < 0) {
                ray = -ray;
            }
            if (!visited_.insert(normalized_l1(ray)).second) {
                return;
            }
            resolve_vertex(ray, items, n_hyper, tracker);
        });
    }

    /// Exact treatment of one vertex: enumerate the cells around it that can
    /// still reach the incumbent and offer one point from each.
    void resolve_vertex(const Vector& v, const std::vector<const Vector*>& items, std::size_t n_hyper,
                        MinTracker& tracker)
    {
        std::vector<Rational> values(items.size());
        std::vector<std::size_t> tight_h;
        std::vector<std::size_t> tight_f;
        for (std::size_t i = 0; i < items.size(); ++i) {
            values[i] = dot(*items[i], v);
            if (values[i] == 0) {
                (i < n_hyper ? tight_h : tight_f).push_back(i);
            }
        }

        std::vector<Vector> rows;
        for (std::size_t k : tight_h) {
            rows.push_back(*items[k]);
        }
        for (std::size_t f : tight_f) {
            rows.push_back(*items[f]);
        }

        std::vector<Vector> directions;
        if (!rows.empty() && rank_of(rows, d_) == rows.size()) {
            // Independent: every sign pattern is realised, so pick the cheaper
            // side of each hyperplane, and both sides on a tie.
            std::vector<std::size_t> ties;
            Vector target(rows.size());
            for (std::size_t r = 0; r < tight_h.size(); ++r) {
                const auto& h = hyper_[tight_h[r]];
                target[r] = h.pos >= h.neg ? 1 : -1;
                if (h.pos == h.neg) {
                    ties.push_back(r);
                }
            }
            for (std::size_t r = tight_h.size(); r < rows.size(); ++r) {
                target[r] = 1;
            }
            const std::size_t n_ties = std::min<std::size_t>(ties.size(), max_tie_split);
            for (unsigned long mask = 0; mask < (1UL << n_ties); ++mask) {
                Vector t = target;
                for (std::size_t b = 0; b < n_ties; ++b) {
                    t[ties[b]] = (mask >> b) & 1UL ? -1 : 1;
                }
                directions.push_back(least_norm_solution(rows, t));
            }
        } else {
            // Degenerate vertex: solve the local problem in the complement of v.
            std::vector<Vector> basis = nullspace({v}, d_);
            auto project = [&](const Vector& a) {
                Vector p(basis.size());
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    p[j] = dot(a, basis[j]);
                }
                return p;
            };
            std::vector<Vector> local_h;
            std::vector<Vector> local_f;
            for (std::size_t k : tight_h) {
                local_h.push_back(project(*items[k]));
            }
            for (std::size_t f : tight_f) {
                local_f.push_back(project(*items[f]));
            }
            for (const auto& u : central_cell_samples(basis.size(), local_h, local_f)) {
                Vector dir(d_);
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    dir += basis[j] * u[j];
                }
                directions.push_back(std::move(dir));
            }
        }

        for (const auto& u : directions) {
            // Step that keeps every item not through v on its current side.
            bool bounded = false;
            Rational step;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (values[i] == 0) {
                    continue;
                }
                Rational slope = dot(*items[i], u);
                if (sgn(slope) * sgn(values[i]) < 0) {
                    Rational limit = -values[i] / slope;
                    if (!bounded || limit < step) {
                        step = limit;
                        bounded = true;
                    }
                }
            }
            step = bounded ? Rational(step / 2) : Rational(1);
            Vector w = v + u * step;
            tracker.offer(w, counted_set(diffs_, w));
            bound_ = std::min(bound_, tracker.best());
        }
    }

    static Vector least_norm_solution(const std::vector<Vector>& rows, const Vector& target)
    {
        const std::size_t k = rows.size();
        std::vector<Vector> gram(k, Vector(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                gram[i][j] = dot(rows[i], rows[j]);
            }
        }
        auto y = solve(std::move(gram), target);
        require(y.has_value(), ErrorKind::validation, "internal: singular local system");
        Vector u(rows.front().size());
        for (std::size_t i = 0; i < k; ++i) {
            u += rows[i] * (*y)[i];
        }
        return u;
    }

    static constexpr std::size_t max_tie_split = 6;

    std::size_t d_;
    const std::vector<Vector>& diffs_;
    std::vector<SignedHyperplane> hyper_;
    std::size_t zero_count_ = 0;
    double tolerance_ = 0;
    std::vector<std::vector<Vector>> pieces_;
    std::size_t bound_ = std::numeric_limits<std::size_t>::max();
    std::set<Vector> visited_;
};

} // namespace conerank::detail
