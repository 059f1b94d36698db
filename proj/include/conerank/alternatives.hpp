#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "conerank/error.hpp"
#include "conerank/vector.hpp"

namespace conerank {

/// The finite set X of alternatives. Ids are unique; coordinates may repeat.
class AlternativeSet {
public:
    AlternativeSet() = default;

    AlternativeSet(std::vector<std::string> ids, std::vector<Vector> points)
        : ids_(std::move(ids)), points_(std::move(points))
    {
        require(ids_.size() == points_.size(), ErrorKind::validation, "ids and points differ in length");
        require(points_.size() >= 2, ErrorKind::validation, "need at least two alternatives");
        dim_ = points_.front().size();
        require(dim_ >= 2, ErrorKind::validation, "need at least two criteria");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            require(points_[i].size() == dim_, ErrorKind::validation,
                    "alternative '" + ids_[i] + "' has dimension " + std::to_string(points_[i].size()) +
                        ", expected " + std::to_string(dim_));
            require(!ids_[i].empty(), ErrorKind::validation, "empty alternative id");
            auto [it, inserted] = index_.emplace(ids_[i], i);
            require(inserted, ErrorKind::validation, "duplicate alternative id '" + ids_[i] + "'");
        }
    }

    /// Ids default to x1, x2, ...
    static AlternativeSet from_points(std::vector<Vector> points)
    {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < points.size(); ++i) {
            ids.push_back("x" + std::to_string(i + 1));
        }
        return AlternativeSet(std::move(ids), std::move(points));
    }

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dim() const noexcept { return dim_; }

    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::vector<Vector>& points() const noexcept { return points_; }
    const std::string& id(std::size_t i) const { return ids_[i]; }
    const Vector& point(std::size_t i) const { return points_[i]; }

    std::optional<std::size_t> find(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::size_t index_of(const std::string& id) const
    {
        auto i = find(id);
        require(i.has_value(), ErrorKind::validation, "unknown alternative id '" + id + "'");
        return *i;
    }

    /// A new set with extra alternatives appended (ids must stay unique).
    AlternativeSet with_added(const std::vector<std::string>& ids, const std::vector<Vector>& points) const
    {
        auto all_ids = ids_;
        auto all_points = points_;
        all_ids.insert(all_ids.end(), ids.begin(), ids.end());
        all_points.insert(all_points.end(), points.begin(), points.end());
        return AlternativeSet(std::move(all_ids), std::move(all_points));
    }

private:
    std::vector<std::string> ids_;
    std::vector<Vector> points_;
    std::size_t dim_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace conerank
