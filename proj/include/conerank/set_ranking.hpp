#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "conerank/geometry.hpp"
#include "conerank/ranking.hpp"

namespace conerank {

/// R-nabla or C_X value of a finite set A, with what explains it.
struct SetRankResult {
    std::size_t value = 0;
    /// Index into A of the first element realising the maximum (set rankings only).
    std::optional<std::size_t> attaining;
    /// Indices into X of {x : a >=_C x for some a in A} (indicator only).
    std::vector<std::size_t> dominated;
};

/// A dominates B: every b in B lies below some a in A.
inline bool set_dominates(std::span<const Vector> a, std::span<const Vector> b, const PolyhedralCone& cone)
{
    for (const auto& y : b) {
        bool covered = false;
        for (const auto& x : a) {
            if (leq_cone(cone, y, x)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

/// max over a in A of r_{X,C}(a); the empty set gets 0.
inline SetRankResult set_rank(std::span<const Vector> a, std::span<const Vector> x, const PolyhedralCone& cone)
{
    SetRankResult out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t r = rank_cone(x, cone, a[i]).value;
        if (!out.attaining || r > out.value) {
            out.value = r;
            out.attaining = i;
        }
    }
    return out;
}

/// max over a in A of r_{X,w}(a).
inline SetRankResult set_rank_w(std::span<const Vector> a, std::span<const Vector> x, const Vector& w)
{
    SetRankResult out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t r = rank_w(x, w, a[i]);
        if (!out.attaining || r > out.value) {
            out.value = r;
            out.attaining = i;
        }
    }
    return out;
}

/// C_X(A) = #{x in X : a >=_C x for some a in A}.
inline SetRankResult indicator_cx(std::span<const Vector> a, std::span<const Vector> x, const PolyhedralCone& cone)
{
    SetRankResult out;
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (const auto& p : a) {
            if (leq_cone(cone, x[j], p)) {
                out.dominated.push_back(j);
                break;
            }
        }
    }
    out.value = out.dominated.size();
    return out;
}

enum class Comparison { less, equal, greater };

inline Comparison compare_values(std::size_t a, std::size_t b)
{
    return a < b ? Comparison::less : a == b ? Comparison::equal : Comparison::greater;
}

/// How R-nabla and C_X order two sets compared with the set order itself.
struct RefinementReport {
    bool a_dominates_b = false;
    bool b_dominates_a = false;
    /// A dominates B and B does not dominate A.
    bool strict = false;
    SetRankResult rnabla_a, rnabla_b, cx_a, cx_b;
    Comparison rnabla = Comparison::equal;
    Comparison cx = Comparison::equal;
    /// Under strict domination: does the indicator separate the sets by at least one?
    bool cx_strict = false;
    bool rnabla_strict = false;
};

inline RefinementReport refinement_check(std::span<const Vector> a, std::span<const Vector> b, std::span<const Vector> x,
                                         const PolyhedralCone& cone)
{
    RefinementReport r;
    r.a_dominates_b = set_dominates(a, b, cone);
    r.b_dominates_a = set_dominates(b, a, cone);
    r.strict = r.a_dominates_b && !r.b_dominates_a;
    r.rnabla_a = set_rank(a, x, cone);
    r.rnabla_b = set_rank(b, x, cone);
    r.cx_a = indicator_cx(a, x, cone);
    r.cx_b = indicator_cx(b, x, cone);
    r.rnabla = compare_values(r.rnabla_a.value, r.rnabla_b.value);
    r.cx = compare_values(r.cx_a.value, r.cx_b.value);
    r.cx_strict = r.strict && r.cx_a.value >= r.cx_b.value + 1;
    r.rnabla_strict = r.strict && r.rnabla_a.value > r.rnabla_b.value;
    return r;
}

} // namespace conerank
