#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "conerank/vector.hpp"

namespace conerank {

/// Value of the cone ranking at one point, with the weight vectors attaining it.
struct RankResult {
    std::size_t value = 0;
    /// One witness per distinct minimizing set X^<=(w, z), each scaled to unit
    /// L1 norm, sorted lexicographically.
    std::vector<Vector> witness_weights;
    /// Indices into X of {x : w.x <= w.z} for the first witness.
    std::vector<std::size_t> counted;
};

namespace detail {

/// Reduces candidate weights to the minimum count, one witness per distinct counted set.
class MinTracker {
public:
    explicit MinTracker(std::size_t n) : n_(n) {}

    void offer(const Vector& w, std::vector<bool> counted)
    {
        std::size_t c = static_cast<std::size_t>(std::count(counted.begin(), counted.end(), true));
        if (c > best_) {
            return;
        }
        if (c < best_) {
            best_ = c;
            by_set_.clear();
        }
        Vector wn = normalized_l1(w);
        auto [it, inserted] = by_set_.emplace(std::move(counted), wn);
        if (!inserted && wn < it->second) {
            it->second = std::move(wn);
        }
    }

    std::size_t best() const { return best_; }

    RankResult result() const
    {
        RankResult r;
        r.value = best_;
        std::vector<std::pair<Vector, const std::vector<bool>*>> ws;
        for (const auto& [set, w] : by_set_) {
            ws.emplace_back(w, &set);
        }
        std::sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [w, set] : ws) {
            r.witness_weights.push_back(w);
        }
        if (!ws.empty()) {
            for (std::size_t i = 0; i < n_; ++i) {
                if ((*ws.front().second)[i]) {
                    r.counted.push_back(i);
                }
            }
        }
        return r;
    }

private:
    std::size_t n_;
    std::size_t best_ = static_cast<std::size_t>(-1);
    std::map<std::vector<bool>, Vector> by_set_;
};

inline std::vector<bool> counted_set(const std::vector<Vector>& diffs, const Vector& w)
{
    std::vector<bool> counted(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        counted[i] = sgn(dot(w, diffs[i])) <= 0;
    }
    return counted;
}

} // namespace detail

} // namespace conerank
