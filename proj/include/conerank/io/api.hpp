#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "conerank/analysis.hpp"
#include "conerank/baselines.hpp"
#include "conerank/classify.hpp"
#include "conerank/io/json.hpp"
#include "conerank/io/plot.hpp"
#include "conerank/io/store.hpp"
#include "conerank/ranking.hpp"
#include "conerank/set_ranking.hpp"

// Request handlers shared by the CLI and the HTTP service. Both build the same
// request object and print dump(response), so their bytes agree.
namespace conerank::io {

struct Response {
    int status = 200;
    Json body;
    /// CLI exit status: 0 or the ErrorKind value.
    int exit_code = 0;
};

inline std::string error_kind_name(const Error& e)
{
    if (const auto* s = dynamic_cast<const StoreError*>(&e)) {
        return s->code() == StoreError::Code::not_found ? "not_found" : "conflict";
    }
    switch (e.kind()) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::infeasible_cone: return "infeasible_cone";
    case ErrorKind::precondition: return "precondition";
    }
    return "validation";
}

inline int http_status(const Error& e)
{
    if (const auto* s = dynamic_cast<const StoreError*>(&e)) {
        return s->code() == StoreError::Code::not_found ? 404 : 409;
    }
    return e.kind() == ErrorKind::validation ? 400 : 422;
}

inline Response error_response(const Error& e)
{
    Response r;
    r.status = http_status(e);
    r.exit_code = e.exit_code();
    r.body = Json{{"error", Json{{"kind", error_kind_name(e)}, {"status", r.status}, {"message", e.what()}}}};
    return r;
}

namespace detail {

struct Context {
    Dataset data;
    bool stored = false;
    PolyhedralCone cone;
    Json warnings = Json::array();
};

inline Dataset resolve_dataset(const Json& req, Store* store)
{
    int sources = static_cast<int>(req.contains("dataset")) + static_cast<int>(req.contains("csv")) +
                  static_cast<int>(req.contains("alternatives"));
    require(sources == 1, ErrorKind::validation, "request needs exactly one of dataset, csv, alternatives");
    if (req.contains("dataset")) {
        require(req["dataset"].is_string(), ErrorKind::validation, "dataset must be an id string");
        require(store != nullptr, ErrorKind::validation, "no dataset store configured");
        std::optional<std::size_t> rev;
        if (req.contains("revision")) {
            require(req["revision"].is_number_unsigned(), ErrorKind::validation, "revision must be a positive integer");
            rev = req["revision"].get<std::size_t>();
        }
        return store->get(req["dataset"].get<std::string>(), rev);
    }
    if (req.contains("csv")) {
        require(req["csv"].is_string(), ErrorKind::validation, "csv must be a string");
        return parse_csv(req["csv"].get<std::string>());
    }
    return parse_dataset_json(req);
}

inline Context context(const Json& req, Store* store)
{
    require(req.is_object(), ErrorKind::validation, "request body must be a JSON object");
    Dataset data = resolve_dataset(req, store);
    require(req.contains("cone"), ErrorKind::validation, "request needs a cone config");
    auto cone = parse_cone(req["cone"]);
    require(cone.dim() == data.alternatives.dim(), ErrorKind::validation,
            "cone dimension " + std::to_string(cone.dim()) + " does not match data dimension " +
                std::to_string(data.alternatives.dim()));
    cone.require_proper();
    const auto n = data.alternatives.size();
    const auto d = data.alternatives.dim();
    Json warnings = Json::array();
    if (n > exact_budget_points || d > exact_budget_dim) {
        warnings.push_back("N = " + std::to_string(n) + ", d = " + std::to_string(d) +
                           " exceeds the exact evaluator budget (N <= 200, d <= 4); oracle mode is available");
    }
    const bool stored = !data.id.empty();
    return Context{std::move(data), stored, std::move(cone), std::move(warnings)};
}

inline Json header(const std::string& command, const Context& c)
{
    Json out;
    out["command"] = command;
    if (c.stored) {
        out["dataset"] = Json{{"id", c.data.id}, {"revision", c.data.revision}};
    }
    out["n"] = c.data.alternatives.size();
    out["d"] = c.data.alternatives.dim();
    out["cone"] = cone_json(c.cone);
    return out;
}

inline Json id_list(const AlternativeSet& x, const std::vector<std::size_t>& idx)
{
    Json out = Json::array();
    for (auto i : idx) {
        out.push_back(x.id(i));
    }
    return out;
}

inline Json rank_table(const AlternativeSet& x, const std::vector<std::size_t>& ranks)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[x.id(i)] = ranks[i];
    }
    return out;
}

inline std::size_t get_size(const Json& req, const char* key, std::size_t fallback)
{
    if (!req.contains(key)) {
        return fallback;
    }
    require(req[key].is_number_unsigned(), ErrorKind::validation, std::string(key) + " must be a nonnegative integer");
    return req[key].get<std::size_t>();
}

inline std::vector<Label> require_labels(const Context& c)
{
    require(c.data.labels.has_value(), ErrorKind::validation, "this command needs a label column");
    return *c.data.labels;
}

inline Json model_json(const ThresholdModel& m, const PolyhedralCone& cone)
{
    Json out;
    out["cone"] = cone_config(cone);
    out["n"] = m.n;
    out["error_rate"] = m.error_rate.get_d();
    out["error_rate_exact"] = to_string(m.error_rate);
    out["errors"] = m.errors;
    out["false_positives"] = m.false_positives;
    out["false_negatives"] = m.false_negatives;
    out["labeled"] = m.labeled;
    out["scan"] = m.scan;
    return out;
}

/// Additions: [{"id": ..., "point": [...], "label": ...}] or bare coordinate arrays (ids add1, add2, ...).
inline void parse_additions(const Json& j, std::size_t d, std::vector<std::string>& ids, std::vector<Vector>& points,
                            std::vector<Label>& labels)
{
    require(j.is_array(), ErrorKind::validation, "additions must be an array");
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& a = j[k];
        if (a.is_array()) {
            ids.push_back("add" + std::to_string(k + 1));
            points.push_back(parse_vector(a, "addition " + std::to_string(k + 1)));
            labels.push_back(Label::unlabeled);
        } else {
            require(a.is_object() && a.contains("id") && a["id"].is_string() && a.contains("point"), ErrorKind::validation,
                    "additions need an id and a point");
            ids.push_back(a["id"].get<std::string>());
            points.push_back(parse_vector(a["point"], "addition '" + ids.back() + "'"));
            labels.push_back(a.contains("label") ? parse_label_json(a["label"], "addition '" + ids.back() + "'")
                                                 : Label::unlabeled);
        }
        require(points.back().size() == d, ErrorKind::validation, "addition '" + ids.back() + "' has the wrong dimension");
    }
}

} // namespace detail

inline Json cmd_rank(const Json& req, Store* store)
{
    auto c = detail::context(req, store);
    const auto& x = c.data.alternatives;
    Json out = detail::header("rank", c);
    const std::size_t samples = detail::get_size(req, "oracle_samples", 0);
    const std::uint64_t seed = detail::get_size(req, "seed", default_seed);
    std::vector<std::size_t> ranks;
    Json results = Json::array();
    if (samples > 0) {
        out["mode"] = "oracle";
        out["oracle_samples"] = samples;
        out["seed"] = seed;
        for (std::size_t i = 0; i < x.size(); ++i) {
            ranks.push_back(rank_cone_oracle(x, c.cone, x.point(i), samples, seed));
            results.push_back(Json{{"id", x.id(i)}, {"rank", ranks.back()}});
        }
    } else {
        out["mode"] = "exact";
        auto all = rank_all(x, c.cone);
        for (std::size_t i = 0; i < x.size(); ++i) {
            ranks.push_back(all[i].value);
            Json r{{"id", x.id(i)}};
            r.update(rank_result_json(all[i], x));
            results.push_back(std::move(r));
        }
    }
    out["ranks"] = detail::rank_table(x, ranks);
    out["results"] = std::move(results);
    std::size_t top = *std::max_element(ranks.begin(), ranks.end());
    std::vector<std::size_t> best;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] == top) {
            best.push_back(i);
        }
    }
    out["max_rank"] = detail::id_list(x, best);
    if (req.contains("queries")) {
        require(req["queries"].is_object(), ErrorKind::validation, "queries must map names to points");
        Json q = Json::object();
        for (const auto& [name, pt] : req["queries"].items()) {
            auto z = parse_vector(pt, "query '" + name + "'");
            require(z.size() == x.dim(), ErrorKind::validation, "query '" + name + "' has the wrong dimension");
            q[name] = samples > 0 ? Json{{"rank", rank_cone_oracle(x, c.cone, z, samples, seed)}}
                                  : rank_result_json(rank_cone(x, c.cone, z), x);
        }
        out["queries"] = std::move(q);
    }
    if (req.value("plot", false)) {
        out["plot"] = plot_json(x, c.cone, ranks);
    }
    out["warnings"] = c.warnings;
    return out;
}

inline Json cmd_setrank(const Json& req, Store* store)
{
    auto c = detail::context(req, store);
    const auto& x = c.data.alternatives;
    Json out = detail::header("setrank", c);

    std::vector<std::string> names;
    std::vector<std::vector<Vector>> sets;
    std::vector<Json> members;
    if (req.value("leave_one_out", false)) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            names.push_back("X\\" + x.id(i));
            sets.emplace_back();
            members.push_back(Json::array());
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (j != i) {
                    sets.back().push_back(x.point(j));
                    members.back().push_back(x.id(j));
                }
            }
        }
    }
    if (req.contains("sets")) {
        require(req["sets"].is_object(), ErrorKind::validation, "sets must map names to member lists");
        for (const auto& [name, list] : req["sets"].items()) {
            require(list.is_array(), ErrorKind::validation, "set '" + name + "' must be an array");
            names.push_back(name);
            sets.emplace_back();
            members.push_back(Json::array());
            for (const auto& m : list) {
                if (m.is_string()) {
                    sets.back().push_back(x.point(x.index_of(m.get<std::string>())));
                    members.back().push_back(m);
                } else {
                    auto p = parse_vector(m, "set '" + name + "'");
                    require(p.size() == x.dim(), ErrorKind::validation, "set '" + name + "' has a point of the wrong dimension");
                    members.back().push_back(exact(p));
                    sets.back().push_back(std::move(p));
                }
            }
        }
    }
    require(!names.empty(), ErrorKind::validation, "setrank needs sets or leave_one_out");

    std::vector<std::size_t> by_id(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        by_id[i] = i;
    }
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return x.id(a) < x.id(b); });

    Json table = Json::object();
    for (std::size_t s = 0; s < names.size(); ++s) {
        auto rn = set_rank(sets[s], x.points(), c.cone);
        auto cx = indicator_cx(sets[s], x.points(), c.cone);
        std::vector<bool> hit(x.size());
        for (auto i : cx.dominated) {
            hit[i] = true;
        }
        Json dominated = Json::array();
        for (auto i : by_id) {
            if (hit[i]) {
                dominated.push_back(x.id(i));
            }
        }
        Json entry;
        entry["members"] = members[s];
        entry["rnabla"] = rn.value;
        entry["attaining"] = rn.attaining ? members[s][*rn.attaining] : Json(nullptr);
        entry["cx"] = cx.value;
        entry["dominated"] = std::move(dominated);
        table[names[s]] = std::move(entry);
    }
    out["sets"] = std::move(table);

    auto cmp_name = [](Comparison c) { return c == Comparison::less ? "less" : c == Comparison::equal ? "equal" : "greater"; };
    Json comparisons = Json::array();
    for (std::size_t a = 0; a < names.size(); ++a) {
        for (std::size_t b = a + 1; b < names.size(); ++b) {
            auto r = refinement_check(sets[a], sets[b], x.points(), c.cone);
            comparisons.push_back(Json{{"a", names[a]},
                                       {"b", names[b]},
                                       {"a_dominates_b", r.a_dominates_b},
                                       {"b_dominates_a", r.b_dominates_a},
                                       {"rnabla", cmp_name(r.rnabla)},
                                       {"cx", cmp_name(r.cx)},
                                       {"strict", r.strict},
                                       {"cx_strict", r.cx_strict},
                                       {"rnabla_strict", r.rnabla_strict}});
        }
    }
    out["comparisons"] = std::move(comparisons);
    out["warnings"] = c.warnings;
    return out;
}

/// What-if: add and/or remove alternatives and report how the survivors' ranks move.
/// With commit = true the edited set becomes the dataset's next revision.
inline Json cmd_whatif(const Json& req, Store* store)
{
    auto c = detail::context(req, store);
    const auto& x = c.data.alternatives;
    Json out = detail::header("whatif", c);

    std::vector<std::string> add_ids;
    std::vector<Vector> add_points;
    std::vector<Label> add_labels;
    if (req.contains("additions")) {
        detail::parse_additions(req["additions"], x.dim(), add_ids, add_points, add_labels);
    }
    std::vector<bool> removed(x.size());
    Json removed_ids = Json::array();
    if (req.contains("removals")) {
        require(req["removals"].is_array(), ErrorKind::validation, "removals must be an array of ids");
        for (const auto& r : req["removals"]) {
            require(r.is_string(), ErrorKind::validation, "removals must be ids");
            auto i = x.index_of(r.get<std::string>());
            require(!removed[i], ErrorKind::validation, "alternative '" + x.id(i) + "' removed twice");
            removed[i] = true;
            removed_ids.push_back(x.id(i));
        }
    }
    require(!add_points.empty() || !removed_ids.empty(), ErrorKind::validation, "what-if needs additions or removals");

    std::vector<std::string> z_ids;
    std::vector<Vector> z_points;
    std::vector<Label> z_labels;
    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!removed[i]) {
            survivors.push_back(i);
            z_ids.push_back(x.id(i));
            z_points.push_back(x.point(i));
            z_labels.push_back(c.data.labels ? (*c.data.labels)[i] : Label::unlabeled);
        }
    }
    z_ids.insert(z_ids.end(), add_ids.begin(), add_ids.end());
    z_points.insert(z_points.end(), add_points.begin(), add_points.end());
    z_labels.insert(z_labels.end(), add_labels.begin(), add_labels.end());
    AlternativeSet z(z_ids, z_points);

    auto before = rank_values(x.points(), c.cone);
    auto after = rank_values(z.points(), c.cone);
    std::vector<std::size_t> before_s;
    std::vector<std::size_t> after_s;
    for (std::size_t k = 0; k < survivors.size(); ++k) {
        before_s.push_back(before[survivors[k]]);
        after_s.push_back(after[k]);
    }
    Json pairs = Json::array();
    for (const auto& p : reversal_pairs(before_s, after_s)) {
        pairs.push_back(Json{{"x", z.id(p.x)},
                             {"y", z.id(p.y)},
                             {"kind", p.kind == ReversalKind::strict ? "strict" : "weak"},
                             {"before", Json::array({p.before_x, p.before_y})},
                             {"after", Json::array({p.after_x, p.after_y})}});
    }
    out["added"] = add_ids;
    out["removed"] = std::move(removed_ids);
    out["before"] = detail::rank_table(x, before);
    out["after"] = detail::rank_table(z, after);
    out["pairs"] = std::move(pairs);
    if (add_points.size() == 1 && survivors.size() == x.size()) {
        bool ok = true;
        for (std::size_t k = 0; k < survivors.size(); ++k) {
            ok = ok && (after_s[k] == before_s[k] || after_s[k] == before_s[k] + 1);
        }
        out["single_addition_bound"] = ok;
    } else {
        out["single_addition_bound"] = nullptr;
    }
    if (req.value("commit", false)) {
        require(c.stored && store != nullptr, ErrorKind::validation, "commit needs a stored dataset");
        Dataset next;
        next.criteria = c.data.criteria;
        next.alternatives = std::move(z);
        if (c.data.labels) {
            next.labels = std::move(z_labels);
        }
        auto saved = store->commit(c.data.id, c.data.revision, std::move(next));
        out["committed"] = Json{{"id", saved.id}, {"revision", saved.revision}};
    }
    out["warnings"] = c.warnings;
    return out;
}

/// The batch form of what-if: additions only, plus maximality, peel layers and
/// outliers of the enlarged set Z when the cone is pointed.
inline Json cmd_reversal(const Json& req, Store* store)
{
    require(!req.contains("removals") && !req.value("commit", false), ErrorKind::validation,
            "reversal takes additions only; use whatif for removals and commits");
    require(req.contains("additions") && req["additions"].is_array() && !req["additions"].empty(), ErrorKind::validation,
            "reversal needs at least one addition");
    Json out = cmd_whatif(req, store);
    out["command"] = "reversal";
    auto c = detail::context(req, store);
    if (!c.cone.is_pointed()) {
        out["warnings"].push_back("cone is not pointed; maximality, peel and outlier diagnostics skipped");
        return out;
    }
    std::vector<std::string> ids = c.data.alternatives.ids();
    std::vector<Vector> points = c.data.alternatives.points();
    std::vector<Label> unused;
    detail::parse_additions(req["additions"], c.data.alternatives.dim(), ids, points, unused);
    AlternativeSet z(ids, points);

    auto warnings = std::move(out["warnings"]);
    out.erase("warnings");
    auto m = check_max_rank_maximality(z.points(), c.cone);
    out["maximality"] = Json{{"maximal", detail::id_list(z, m.maximal)},
                             {"max_rank", detail::id_list(z, m.max_rank)},
                             {"violations", detail::id_list(z, m.violations)},
                             {"maximal_below_top", detail::id_list(z, m.maximal_below_top)}};
    Json layers = Json::array();
    for (const auto& layer : peel_ranking(z.points(), c.cone)) {
        Json ranks = Json::object();
        for (std::size_t k = 0; k < layer.members.size(); ++k) {
            ranks[z.id(layer.members[k])] = layer.ranks[k];
        }
        layers.push_back(Json{{"ranks", std::move(ranks)},
                              {"best", detail::id_list(z, layer.best)},
                              {"removed", detail::id_list(z, layer.removed)}});
    }
    out["peel"] = std::move(layers);
    const std::size_t gap = detail::get_size(req, "gap", default_outlier_gap(z.size()));
    out["outliers"] = Json{{"gap", gap}, {"flagged", detail::id_list(z, flag_outliers(z.points(), c.cone, gap))}};
    out["warnings"] = std::move(warnings);
    return out;
}

inline Json cmd_classify(const Json& req, Store* store)
{
    auto c = detail::context(req, store);
    const auto& x = c.data.alternatives;
    Json out = detail::header("classify", c);
    auto ranks = rank_values(x.points(), c.cone);
    out["ranks"] = detail::rank_table(x, ranks);

    if (req.contains("n")) {
        std::size_t n = detail::get_size(req, "n", 0);
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (ranks[i] >= n) {
                members.push_back(i);
            }
        }
        out["level_set"] = Json{{"n", n}, {"members", detail::id_list(x, members)}};
    }
    if (req.contains("alpha")) {
        Rational alpha = parse_number(req["alpha"], "alpha");
        auto best = alpha_best_from_ranks(ranks, alpha);
        out["alpha_best"] = Json{{"alpha", alpha.get_d()},
                                 {"alpha_exact", to_string(alpha)},
                                 {"n", best.n},
                                 {"members", detail::id_list(x, best.members)}};
    }
    auto gbu = cluster_gbu(x.points(), c.cone);
    out["gbu"] = Json{{"threshold", gbu.threshold},
                      {"reverse_ranks", detail::rank_table(x, gbu.reverse_ranks)},
                      {"good", detail::id_list(x, gbu.good)},
                      {"bad", detail::id_list(x, gbu.bad)},
                      {"ugly", detail::id_list(x, gbu.ugly)},
                      {"overlap", detail::id_list(x, gbu.overlap)}};
    if (c.data.labels) {
        const auto& labels = *c.data.labels;
        bool any = std::any_of(labels.begin(), labels.end(), [](Label l) { return l != Label::unlabeled; });
        if (any) {
            out["threshold_model"] = detail::model_json(fit_threshold_from_ranks(ranks, labels), c.cone);
        }
        auto prop = propagate_labels(x.points(), labels, c.cone);
        Json lab = Json::object();
        for (std::size_t i = 0; i < x.size(); ++i) {
            lab[x.id(i)] = label_json(prop.labels[i]);
        }
        out["propagation"] = Json{{"labels", std::move(lab)},
                                  {"newly_labeled", detail::id_list(x, prop.newly_labeled)},
                                  {"conflicts", detail::id_list(x, prop.conflicts)}};
    }
    out["warnings"] = c.warnings;
    return out;
}

inline Json cmd_align(const Json& req, Store* store)
{
    auto c = detail::context(req, store);
    const auto& x = c.data.alternatives;
    auto labels = detail::require_labels(c);
    Json out = detail::header("align", c);
    auto al = align_cone_svm(x.points(), labels, c.cone);
    Json w_int = Json::array();
    for (double v : al.w_int) {
        w_int.push_back(v);
    }
    out["w_svm"] = doubles(al.w_svm);
    out["w_svm_exact"] = exact(al.w_svm);
    out["w_int"] = std::move(w_int);
    out["angle"] = al.angle;
    out["angle_degrees"] = al.angle * 180 / std::numbers::pi;
    out["aligned_cone"] = cone_json(al.cone);
    out["before"] = detail::model_json(fit_threshold(x.points(), labels, c.cone), c.cone);
    out["after"] = detail::model_json(fit_threshold(x.points(), labels, al.cone), al.cone);
    out["warnings"] = c.warnings;
    return out;
}

inline Json cmd_compare(const Json& req, Store* store)
{
    auto c = detail::context(req, store);
    const auto& x = c.data.alternatives;
    const auto d = x.dim();
    Json out = detail::header("compare", c);

    // Default weight: the mean of the L1-normalised dual rays, which lies in C+.
    Vector w(d);
    if (req.contains("weights")) {
        w = parse_vector(req["weights"], "weights");
        require(w.size() == d, ErrorKind::validation, "one weight per criterion expected");
        require(!w.is_zero() && c.cone.dual().contains(w), ErrorKind::validation, "weights must lie in the dual cone");
    } else {
        for (const auto& r : c.cone.dual_rays()) {
            w += normalized_l1(r);
        }
    }
    w = normalized_l1(w);
    TopsisConfig cfg;
    for (const auto& v : w) {
        cfg.weights.push_back(v.get_d());
    }
    // to_doubles of an L1-normalised vector can be a rounding step off 1
    double total = 0;
    for (double v : cfg.weights) {
        total += v;
    }
    for (double& v : cfg.weights) {
        v /= total;
    }
    if (req.contains("senses")) {
        require(req["senses"].is_array() && req["senses"].size() == d, ErrorKind::validation, "one sense per criterion expected");
        for (const auto& s : req["senses"]) {
            require(s == "benefit" || s == "cost", ErrorKind::validation, "sense must be benefit or cost");
            cfg.senses.push_back(s == "benefit" ? Sense::benefit : Sense::cost);
        }
    }
    auto topsis = topsis_rank(x.points(), cfg);
    auto sums = weighted_sum_rank(x.points(), w);
    auto ranks = rank_values(x.points(), c.cone);
    out["weights"] = doubles(w);
    out["weights_exact"] = exact(w);
    Json rows = Json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        rows.push_back(Json{{"id", x.id(i)},
                            {"topsis", topsis[i]},
                            {"weighted_sum", sums[i].get_d()},
                            {"weighted_sum_exact", to_string(sums[i])},
                            {"cone_rank", ranks[i]}});
    }
    out["rows"] = std::move(rows);
    out["warnings"] = c.warnings;
    return out;
}

/// Dispatches one command; never throws for bad input.
inline Response handle(const std::string& command, const Json& req, Store* store)
{
    try {
        Response r;
        if (command == "rank") {
            r.body = cmd_rank(req, store);
        } else if (command == "setrank") {
            r.body = cmd_setrank(req, store);
        } else if (command == "whatif") {
            r.body = cmd_whatif(req, store);
        } else if (command == "reversal") {
            r.body = cmd_reversal(req, store);
        } else if (command == "classify") {
            r.body = cmd_classify(req, store);
        } else if (command == "align") {
            r.body = cmd_align(req, store);
        } else if (command == "compare") {
            r.body = cmd_compare(req, store);
        } else {
            fail(ErrorKind::validation, "unknown command '" + command + "'");
        }
        return r;
    } catch (const Error& e) {
        return error_response(e);
    } catch (const nlohmann::json::exception& e) {
        return error_response(Error(ErrorKind::validation, std::string("malformed JSON: ") + e.what()));
    }
}

} // namespace conerank::io
