#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "conerank/geometry.hpp"
#include "conerank/io/dataset.hpp"
#include "conerank/rank_result.hpp"

// JSON conventions: key order is insertion order, doubles are for display and
// every value that has to stay exact gets a parallel "num/den" string.
namespace conerank::io {

using Json = nlohmann::ordered_json;

/// Output text for every response: two-space indent and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json doubles(const Vector& v)
{
    Json out = Json::array();
    for (const auto& c : v) {
        out.push_back(c.get_d());
    }
    return out;
}

inline Json exact(const Vector& v)
{
    Json out = Json::array();
    for (const auto& c : v) {
        out.push_back(to_string(c));
    }
    return out;
}

inline Json exact_list(const std::vector<Vector>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs) {
        out.push_back(exact(v));
    }
    return out;
}

inline Json doubles_list(const std::vector<Vector>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs) {
        out.push_back(doubles(v));
    }
    return out;
}

/// Integers are exact, floats go through their shortest decimal, strings may be "p/q".
inline Rational parse_number(const Json& j, const std::string& where)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_number_float()) {
        return from_double(j.get<double>());
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            fail(ErrorKind::validation, where + ": " + e.what());
        }
    }
    fail(ErrorKind::validation, where + ": expected a number");
}

inline Vector parse_vector(const Json& j, const std::string& where)
{
    require(j.is_array(), ErrorKind::validation, where + ": expected an array of numbers");
    Vector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        v[i] = parse_number(j[i], where);
    }
    return v;
}

inline std::vector<Vector> parse_vectors(const Json& j, const std::string& where)
{
    require(j.is_array() && !j.empty(), ErrorKind::validation, where + ": expected a non-empty array of vectors");
    std::vector<Vector> out;
    for (const auto& v : j) {
        out.push_back(parse_vector(v, where));
        require(out.back().size() == out.front().size(), ErrorKind::validation, where + ": vectors differ in dimension");
    }
    return out;
}

/// {"rays": ...} | {"dual_rays": ...} | {"weight_bounds": {"min": ..., "max": ...}}, exactly one.
inline PolyhedralCone parse_cone(const Json& j)
{
    require(j.is_object(), ErrorKind::validation, "cone config must be a JSON object");
    int keys = static_cast<int>(j.contains("rays")) + static_cast<int>(j.contains("dual_rays")) +
               static_cast<int>(j.contains("weight_bounds"));
    require(keys == 1, ErrorKind::validation, "cone config needs exactly one of rays, dual_rays, weight_bounds");
    if (j.contains("rays")) {
        auto rays = parse_vectors(j["rays"], "cone rays");
        auto d = rays.front().size();
        auto cone = PolyhedralCone::from_rays(std::move(rays), d);
        return cone;
    }
    if (j.contains("dual_rays")) {
        auto rays = parse_vectors(j["dual_rays"], "cone dual_rays");
        auto d = rays.front().size();
        return PolyhedralCone::from_dual_rays(std::move(rays), d);
    }
    const auto& wb = j["weight_bounds"];
    require(wb.is_object() && wb.contains("min") && wb.contains("max"), ErrorKind::validation,
            "weight_bounds needs min and max arrays");
    WeightBounds bounds;
    for (const auto& c : parse_vector(wb["min"], "weight_bounds.min")) {
        bounds.mins.push_back(c);
    }
    for (const auto& c : parse_vector(wb["max"], "weight_bounds.max")) {
        bounds.maxs.push_back(c);
    }
    return cone_from_weight_bounds(bounds);
}

/// A config that parse_cone reads back to the same cone.
inline Json cone_config(const PolyhedralCone& cone) { return Json{{"dual_rays", exact_list(cone.dual_rays())}}; }

inline Json cone_json(const PolyhedralCone& cone)
{
    Json out;
    out["rays"] = doubles_list(cone.rays());
    out["rays_exact"] = exact_list(cone.rays());
    out["dual_rays"] = doubles_list(cone.dual_rays());
    out["dual_rays_exact"] = exact_list(cone.dual_rays());
    out["pointed"] = cone.is_pointed();
    out["full_dimensional"] = cone.is_full_dimensional();
    return out;
}

inline Json label_json(Label l)
{
    return l == Label::acceptable ? Json(1) : l == Label::unacceptable ? Json(0) : Json(nullptr);
}

inline Label parse_label_json(const Json& j, const std::string& where)
{
    if (j.is_null()) {
        return Label::unlabeled;
    }
    require(j.is_number_integer() && (j.get<long>() == 0 || j.get<long>() == 1), ErrorKind::validation,
            where + ": label must be 1, 0 or null");
    return j.get<long>() == 1 ? Label::acceptable : Label::unacceptable;
}

/// Dataset body: ids, exact coordinates and labels. Stored datasets add id,
/// revision and timestamp in front.
inline Json dataset_json(const Dataset& ds)
{
    Json out;
    if (!ds.id.empty()) {
        out["id"] = ds.id;
        out["revision"] = ds.revision;
        out["created_at"] = ds.created_at;
    }
    out["n"] = ds.alternatives.size();
    out["d"] = ds.alternatives.dim();
    out["criteria"] = ds.criteria;
    out["labeled"] = ds.labels.has_value();
    Json alts = Json::array();
    for (std::size_t i = 0; i < ds.alternatives.size(); ++i) {
        Json a;
        a["id"] = ds.alternatives.id(i);
        a["point"] = doubles(ds.alternatives.point(i));
        a["point_exact"] = exact(ds.alternatives.point(i));
        if (ds.labels) {
            a["label"] = label_json((*ds.labels)[i]);
        }
        alts.push_back(std::move(a));
    }
    out["alternatives"] = std::move(alts);
    return out;
}

/// Inverse of dataset_json; reads "point_exact" when present, else "point".
inline Dataset parse_dataset_json(const Json& j)
{
    require(j.is_object() && j.contains("alternatives") && j["alternatives"].is_array(), ErrorKind::validation,
            "dataset needs an alternatives array");
    Dataset ds;
    if (j.contains("id")) {
        ds.id = j["id"].get<std::string>();
        ds.revision = j.value("revision", std::size_t{0});
        ds.created_at = j.value("created_at", std::string{});
    }
    std::vector<std::string> ids;
    std::vector<Vector> points;
    std::vector<Label> labels;
    bool labeled = false;
    for (const auto& a : j["alternatives"]) {
        require(a.is_object() && a.contains("id") && a["id"].is_string(), ErrorKind::validation,
                "every alternative needs a string id");
        ids.push_back(a["id"].get<std::string>());
        const auto& pt = a.contains("point_exact") ? a["point_exact"] : a.contains("point") ? a["point"] : Json();
        points.push_back(parse_vector(pt, "alternative '" + ids.back() + "'"));
        labeled = labeled || a.contains("label");
        labels.push_back(a.contains("label") ? parse_label_json(a["label"], "alternative '" + ids.back() + "'")
                                             : Label::unlabeled);
    }
    ds.alternatives = AlternativeSet(std::move(ids), std::move(points));
    if (j.contains("criteria")) {
        ds.criteria = j["criteria"].get<std::vector<std::string>>();
        require(ds.criteria.size() == ds.alternatives.dim(), ErrorKind::validation, "one criterion name per coordinate expected");
    } else {
        for (std::size_t k = 0; k < ds.alternatives.dim(); ++k) {
            ds.criteria.push_back("c" + std::to_string(k + 1));
        }
    }
    if (labeled || j.value("labeled", false)) {
        ds.labels = std::move(labels);
    }
    return ds;
}

inline Json rank_result_json(const RankResult& r, const AlternativeSet& x)
{
    Json out;
    out["rank"] = r.value;
    Json ws = Json::array();
    for (const auto& w : r.witness_weights) {
        ws.push_back(Json{{"w", doubles(w)}, {"w_exact", exact(w)}});
    }
    out["witnesses"] = std::move(ws);
    Json counted = Json::array();
    for (auto i : r.counted) {
        counted.push_back(x.id(i));
    }
    out["counted"] = std::move(counted);
    return out;
}

} // namespace conerank::io
