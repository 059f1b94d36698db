#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "conerank/alternatives.hpp"
#include "conerank/classify.hpp"
#include "conerank/error.hpp"
#include "conerank/rational.hpp"

namespace conerank::io {

/// Alternatives with criterion names and optional labels. Stored datasets also
/// carry an id and revision; inline ones leave them empty.
struct Dataset {
    std::string id;
    std::size_t revision = 0;
    std::string created_at;
    std::vector<std::string> criteria;
    AlternativeSet alternatives;
    std::optional<std::vector<Label>> labels;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

} // namespace detail

inline Label parse_label(std::string_view cell, std::size_t row)
{
    if (cell.empty()) {
        return Label::unlabeled;
    }
    if (cell == "1") {
        return Label::acceptable;
    }
    if (cell == "0") {
        return Label::unacceptable;
    }
    fail(ErrorKind::validation, "row " + std::to_string(row) + ": label must be 1, 0 or empty, got '" + std::string(cell) + "'");
}

inline std::string label_text(Label l) { return l == Label::acceptable ? "1" : l == Label::unacceptable ? "0" : ""; }

/// Parses "id,c1,...,cd[,label]". Blank lines and lines starting with '#' are
/// skipped; row numbers in errors count physical lines from 1.
inline Dataset parse_csv(std::string_view text)
{
    Dataset ds;
    std::vector<std::string> ids;
    std::vector<Vector> points;
    std::vector<Label> labels;
    bool has_label = false;
    bool header_seen = false;
    std::size_t d = 0;
    std::size_t row = 0;
    std::vector<std::pair<std::string, std::size_t>> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++row;
        line = detail::trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto cells = detail::split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            require(cells.size() >= 3, ErrorKind::validation, "header needs an id column and at least two criteria");
            require(cells[0] == "id", ErrorKind::validation, "first header column must be 'id'");
            has_label = cells.back() == "label";
            d = cells.size() - 1 - (has_label ? 1 : 0);
            require(d >= 2, ErrorKind::validation, "need at least two criteria, found " + std::to_string(d));
            ds.criteria.assign(cells.begin() + 1, cells.begin() + 1 + static_cast<std::ptrdiff_t>(d));
            continue;
        }
        std::size_t expected = 1 + d + (has_label ? 1 : 0);
        // A trailing empty label may be dropped by some writers.
        if (has_label && cells.size() == expected - 1) {
            cells.emplace_back();
        }
        require(cells.size() == expected, ErrorKind::validation,
                "row " + std::to_string(row) + ": expected " + std::to_string(expected) + " cells, got " + std::to_string(cells.size()));
        require(!cells[0].empty(), ErrorKind::validation, "row " + std::to_string(row) + ": empty id");
        for (const auto& [id, r] : seen) {
            require(id != cells[0], ErrorKind::validation,
                    "row " + std::to_string(row) + ": duplicate id '" + cells[0] + "' (first seen on row " + std::to_string(r) + ")");
        }
        seen.emplace_back(cells[0], row);
        Vector p(d);
        for (std::size_t j = 0; j < d; ++j) {
            try {
                p[j] = parse_rational(cells[1 + j]);
            } catch (const Error&) {
                fail(ErrorKind::validation, "row " + std::to_string(row) + ", column '" + ds.criteria[j] +
                                                "': not a number: '" + cells[1 + j] + "'");
            }
        }
        ids.push_back(cells[0]);
        points.push_back(std::move(p));
        if (has_label) {
            labels.push_back(parse_label(cells.back(), row));
        }
    }
    require(header_seen, ErrorKind::validation, "empty CSV input");
    require(points.size() >= 2, ErrorKind::validation, "need at least two alternatives, found " + std::to_string(points.size()));
    ds.alternatives = AlternativeSet(std::move(ids), std::move(points));
    if (has_label) {
        ds.labels = std::move(labels);
    }
    return ds;
}

/// Canonical CSV text: exact rationals, one row per alternative.
inline std::string to_csv(const Dataset& ds)
{
    std::ostringstream out;
    out << "id";
    for (const auto& c : ds.criteria) {
        out << ',' << c;
    }
    if (ds.labels) {
        out << ",label";
    }
    out << '\n';
    for (std::size_t i = 0; i < ds.alternatives.size(); ++i) {
        out << ds.alternatives.id(i);
        for (const auto& c : ds.alternatives.point(i)) {
            out << ',' << to_string(c);
        }
        if (ds.labels) {
            out << ',' << label_text((*ds.labels)[i]);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace conerank::io
