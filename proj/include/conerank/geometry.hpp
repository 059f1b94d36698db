#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "conerank/error.hpp"
#include "conerank/linalg.hpp"
#include "conerank/vector.hpp"

namespace conerank {

namespace detail {

inline void require_dim(const Vector& v, std::size_t dim, const char* what)
{
    require(v.size() == dim, ErrorKind::validation,
            std::string(what) + ": expected dimension " + std::to_string(dim) + ", got " + std::to_string(v.size()));
}

/// Drops zero vectors, scales to unit L1 norm, sorts and removes duplicates.
inline std::vector<Vector> canonical_directions(std::vector<Vector> vs)
{
    std::vector<Vector> out;
    out.reserve(vs.size());
    for (auto& v : vs) {
        if (!v.is_zero()) {
            out.push_back(normalized_l1(std::move(v)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// H-representation of cone(generators): normals n with cone = {z : n.z >= 0}.
/// Lineality shows up as a +-pair of normals for every direction orthogonal to
/// the span. Brute force over (k-1)-subsets of generators, k = rank.
inline std::vector<Vector> facets_of(const std::vector<Vector>& generators, std::size_t dim)
{
    std::vector<Vector> gens = canonical_directions(generators);
    std::vector<Vector> normals;
    if (gens.empty()) {
        for (std::size_t j = 0; j < dim; ++j) {
            normals.push_back(Vector::unit(dim, j, 1));
            normals.push_back(Vector::unit(dim, j, -1));
        }
        return canonical_directions(std::move(normals));
    }

    const std::size_t k = rank_of(gens, dim);
    const std::vector<Vector> complement = nullspace(gens, dim);
    for (const auto& w : complement) {
        normals.push_back(w);
        normals.push_back(-w);
    }

    for_each_subset(gens.size(), k - 1, [&](const std::vector<std::size_t>& subset) {
        std::vector<Vector> rows = complement;
        for (auto i : subset) {
            rows.push_back(gens[i]);
        }
        auto null = nullspace(rows, dim);
        if (null.size() != 1) {
            return;
        }
        Vector n = std::move(null.front());
        bool any_pos = false;
        bool any_neg = false;
        for (const auto& g : gens) {
            int s = sgn(dot(n, g));
            any_pos |= s > 0;
            any_neg |= s < 0;
        }
        if (any_pos && any_neg) {
            return;
        }
        normals.push_back(any_neg ? Vector(-n) : n);
    });
    return canonical_directions(std::move(normals));
}

} // namespace detail

/// A polyhedral convex cone kept in both representations:
///   rays          generators, C = cone(rays)
///   facet_normals C = {z : n.z >= 0 for every normal n}
/// Both lists are canonical (unit L1 norm, sorted), so the rays of C are the
/// facet normals of its dual C+ and vice versa.
class PolyhedralCone {
public:
    static PolyhedralCone from_rays(std::vector<Vector> rays, std::size_t dim)
    {
        check_dim(rays, dim);
        auto normals = detail::facets_of(rays, dim);
        auto minimal = detail::facets_of(normals, dim);
        return PolyhedralCone(dim, std::move(minimal), std::move(normals));
    }

    static PolyhedralCone from_facets(std::vector<Vector> normals, std::size_t dim)
    {
        check_dim(normals, dim);
        auto rays = detail::facets_of(normals, dim);
        auto minimal = detail::facets_of(rays, dim);
        return PolyhedralCone(dim, std::move(rays), std::move(minimal));
    }

    /// The cone whose dual is generated by `dual_rays` (weight vectors).
    static PolyhedralCone from_dual_rays(std::vector<Vector> dual_rays, std::size_t dim)
    {
        return from_facets(std::move(dual_rays), dim);
    }

    static PolyhedralCone nonnegative_orthant(std::size_t dim)
    {
        std::vector<Vector> e;
        for (std::size_t j = 0; j < dim; ++j) {
            e.push_back(Vector::unit(dim, j));
        }
        return from_rays(std::move(e), dim);
    }

    /// H+(w) = {z : w.z >= 0}.
    static PolyhedralCone halfspace(const Vector& w)
    {
        require(!w.is_zero(), ErrorKind::validation, "halfspace normal must be nonzero");
        return from_facets({w}, w.size());
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Vector>& rays() const noexcept { return rays_; }
    const std::vector<Vector>& facet_normals() const noexcept { return normals_; }
    /// Generators of C+.
    const std::vector<Vector>& dual_rays() const noexcept { return normals_; }

    bool is_pointed() const noexcept { return pointed_; }
    bool is_full_dimensional() const noexcept { return full_dimensional_; }
    bool is_zero() const noexcept { return rays_.empty(); }
    bool is_whole_space() const noexcept { return normals_.empty(); }
    bool is_proper() const noexcept { return !is_zero() && !is_whole_space(); }

    bool contains(const Vector& z) const
    {
        detail::require_dim(z, dim_, "cone membership");
        return std::all_of(normals_.begin(), normals_.end(), [&](const Vector& n) { return sgn(dot(n, z)) >= 0; });
    }

    /// z in int C. Only meaningful for full-dimensional cones.
    bool contains_interior(const Vector& z) const
    {
        require(full_dimensional_, ErrorKind::precondition, "interior test needs a full-dimensional cone");
        detail::require_dim(z, dim_, "cone membership");
        return std::all_of(normals_.begin(), normals_.end(), [&](const Vector& n) { return sgn(dot(n, z)) > 0; });
    }

    PolyhedralCone dual() const { return PolyhedralCone(dim_, normals_, rays_); }

    /// -C, the cone of the reversed order.
    PolyhedralCone negated() const
    {
        std::vector<Vector> r;
        for (const auto& v : rays_) {
            r.push_back(-v);
        }
        std::vector<Vector> n;
        for (const auto& v : normals_) {
            n.push_back(-v);
        }
        return PolyhedralCone(dim_, detail::canonical_directions(std::move(r)), detail::canonical_directions(std::move(n)));
    }

    /// Rejects {0} and R^d, which make the cone ranking degenerate.
    void require_proper() const
    {
        require(!is_zero(), ErrorKind::infeasible_cone, "the zero cone cannot be used for ranking");
        require(!is_whole_space(), ErrorKind::infeasible_cone, "the whole space cannot be used for ranking");
    }

    friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b)
    {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.normals_ == b.normals_;
    }

private:
    PolyhedralCone(std::size_t dim, std::vector<Vector> rays, std::vector<Vector> normals)
        : dim_(dim), rays_(std::move(rays)), normals_(std::move(normals))
    {
        pointed_ = detail::rank_of(normals_, dim_) == dim_;
        full_dimensional_ = detail::rank_of(rays_, dim_) == dim_;
    }

    static void check_dim(const std::vector<Vector>& vs, std::size_t dim)
    {
        require(dim >= 2, ErrorKind::validation, "cone dimension must be at least 2");
        for (const auto& v : vs) {
            detail::require_dim(v, dim, "cone generator");
        }
    }

    std::size_t dim_ = 0;
    std::vector<Vector> rays_;
    std::vector<Vector> normals_;
    bool pointed_ = false;
    bool full_dimensional_ = false;
};

inline PolyhedralCone dual_cone(const PolyhedralCone& cone) { return cone.dual(); }

/// y <=_C z iff z - y in C.
inline bool leq_cone(const PolyhedralCone& cone, const Vector& y, const Vector& z)
{
    detail::require_dim(y, cone.dim(), "leq_cone");
    return cone.contains(z - y);
}

/// y <_C z iff z - y in int C; needs int C nonempty.
inline bool lt_cone(const PolyhedralCone& cone, const Vector& y, const Vector& z)
{
    detail::require_dim(y, cone.dim(), "lt_cone");
    return cone.contains_interior(z - y);
}

/// Per-criterion weight bounds; the admissible weights are
/// W = {w : sum w = 1, mins <= w <= maxs}.
struct WeightBounds {
    std::vector<Rational> mins;
    std::vector<Rational> maxs;

    void validate() const
    {
        require(mins.size() == maxs.size(), ErrorKind::validation, "weight bounds: min and max lengths differ");
        require(mins.size() >= 2, ErrorKind::validation, "weight bounds: need at least two criteria");
        Rational lo = 0;
        Rational hi = 0;
        for (std::size_t i = 0; i < mins.size(); ++i) {
            require(mins[i] >= 0 && maxs[i] <= 1, ErrorKind::validation, "weight bounds must lie in [0,1]");
            require(mins[i] <= maxs[i], ErrorKind::infeasible_cone,
                    "weight bounds: min exceeds max for criterion " + std::to_string(i));
            lo += mins[i];
            hi += maxs[i];
        }
        require(lo <= 1 && hi >= 1, ErrorKind::infeasible_cone, "weight bounds are infeasible: need sum(min) <= 1 <= sum(max)");
    }
};

/// Vertices of W. A vertex fixes all but one coordinate at a bound; the free
/// coordinate is whatever makes the weights sum to one.
inline std::vector<Vector> weight_polytope_vertices(const WeightBounds& bounds)
{
    bounds.validate();
    const std::size_t d = bounds.mins.size();
    std::vector<Vector> vertices;
    for (std::size_t free = 0; free < d; ++free) {
        for (unsigned long mask = 0; mask < (1UL << (d - 1)); ++mask) {
            Vector w(d);
            Rational rest = 1;
            std::size_t bit = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == free) {
                    continue;
                }
                w[j] = (mask >> bit++) & 1UL ? bounds.maxs[j] : bounds.mins[j];
                rest -= w[j];
            }
            if (rest >= bounds.mins[free] && rest <= bounds.maxs[free]) {
                w[free] = rest;
                vertices.push_back(std::move(w));
            }
        }
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

/// C = (cone W)+; its dual rays are the vertices of W.
inline PolyhedralCone cone_from_weight_bounds(const WeightBounds& bounds)
{
    auto vertices = weight_polytope_vertices(bounds);
    return PolyhedralCone::from_dual_rays(std::move(vertices), bounds.mins.size());
}

} // namespace conerank
