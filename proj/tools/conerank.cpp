// conerank: batch front end over the same request handlers as the HTTP service.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "conerank/io/api.hpp"
#include "conerank/io/service.hpp"

using namespace conerank;
using namespace conerank::io;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::validation, "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json(const std::string& path)
{
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::validation, path + ": malformed JSON: " + e.what());
    }
}

/// Additions file: a JSON array as in requests, or CSV rows "id,c1,...,cd" with an optional header.
Json read_additions(const std::string& path)
{
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        return read_json(path);
    }
    Json out = Json::array();
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        auto cells = io::detail::split_csv_line(io::detail::trim(line));
        if (cells.empty() || cells[0].empty() || cells[0][0] == '#' || cells[0] == "id") {
            continue;
        }
        require(cells.size() >= 3, ErrorKind::validation, path + ", row " + std::to_string(row) + ": expected id and coordinates");
        Json pt = Json::array();
        for (std::size_t j = 1; j < cells.size(); ++j) {
            pt.push_back(cells[j]);
        }
        Json a;
        a["id"] = cells[0];
        a["point"] = std::move(pt);
        out.push_back(std::move(a));
    }
    return out;
}

std::string default_store()
{
    const char* env = std::getenv("CONERANK_STORE");
    return env ? env : "conerank-store";
}

struct Common {
    std::string csv;
    std::string dataset;
    std::size_t revision = 0;
    std::string store = default_store();
    std::string cone;
};

void add_common(CLI::App* sub, Common& c, bool need_cone = true)
{
    sub->add_option("data", c.csv, "CSV file: id, criteria columns, optional label column");
    sub->add_option("--dataset", c.dataset, "stored dataset id instead of a CSV file");
    sub->add_option("--revision", c.revision, "expected dataset revision (stale revisions are rejected)");
    sub->add_option("--store", c.store, "store directory (default $CONERANK_STORE or ./conerank-store)");
    auto* cone = sub->add_option("--cone", c.cone, "cone config JSON: rays, dual_rays or weight_bounds");
    if (need_cone) {
        cone->required();
    }
}

Json base_request(const Common& c, std::unique_ptr<Store>& store)
{
    Json req = Json::object();
    require(c.csv.empty() != c.dataset.empty(), ErrorKind::validation, "give either a CSV file or --dataset");
    if (!c.dataset.empty()) {
        store = std::make_unique<Store>(c.store);
        req["dataset"] = c.dataset;
        if (c.revision > 0) {
            req["revision"] = c.revision;
        }
    } else {
        req["csv"] = read_file(c.csv);
    }
    if (!c.cone.empty()) {
        req["cone"] = read_json(c.cone);
    }
    return req;
}

int emit(const Response& r)
{
    std::cout << dump(r.body);
    if (r.body.contains("error")) {
        std::cerr << "conerank: " << r.body["error"]["message"].get<std::string>() << '\n';
    } else if (r.body.contains("warnings")) {
        for (const auto& w : r.body["warnings"]) {
            std::cerr << "warning: " << w.get<std::string>() << '\n';
        }
    }
    return r.exit_code;
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    for (auto& cell : io::detail::split_csv_line(s)) {
        out.push_back(cell);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cone distribution rankings for multi-criteria decisions"};
    app.require_subcommand(1);

    Common common;
    std::unique_ptr<Store> store;
    std::function<Json()> build;
    std::string command;

    // rank
    auto* rank = app.add_subcommand("rank", "rank every alternative (exact, with witnesses)");
    add_common(rank, common);
    std::size_t oracle_samples = 0;
    std::uint64_t seed = default_seed;
    std::string plot;
    std::vector<std::string> queries;
    rank->add_option("--oracle-samples", oracle_samples, "use the sampling oracle with K samples instead of the exact evaluator");
    rank->add_option("--seed", seed, "oracle seed (default " + std::to_string(default_seed) + ")");
    rank->add_option("--plot", plot, "write an SVG scatter plot here and its JSON description next to it (d = 2)");
    rank->add_option("--query", queries, "extra point to rank, as name=c1,c2,...");
    rank->callback([&] {
        command = "rank";
        build = [&] {
            Json req = base_request(common, store);
            if (oracle_samples > 0) {
                req["oracle_samples"] = oracle_samples;
                req["seed"] = seed;
            }
            if (!queries.empty()) {
                Json q = Json::object();
                for (const auto& s : queries) {
                    auto eq = s.find('=');
                    require(eq != std::string::npos, ErrorKind::validation, "--query needs name=c1,c2,...");
                    q[s.substr(0, eq)] = split_list(s.substr(eq + 1));
                }
                req["queries"] = std::move(q);
            }
            if (!plot.empty()) {
                req["plot"] = true;
            }
            return req;
        };
    });

    // setrank
    auto* setrank = app.add_subcommand("setrank", "set rankings R-nabla and the indicator C_X");
    add_common(setrank, common);
    std::string sets_file;
    bool leave_one_out = false;
    setrank->add_option("--sets", sets_file, "JSON file {\"sets\": {\"A\": [\"id\", [x, y]], ...}}");
    setrank->add_flag("--leave-one-out", leave_one_out, "also rank every X minus one alternative");
    setrank->callback([&] {
        command = "setrank";
        build = [&] {
            Json req = base_request(common, store);
            if (!sets_file.empty()) {
                Json s = read_json(sets_file);
                req["sets"] = s.contains("sets") ? s["sets"] : s;
            }
            if (leave_one_out) {
                req["leave_one_out"] = true;
            }
            return req;
        };
    });

    // reversal / whatif
    std::string additions;
    std::vector<std::string> removals;
    std::size_t gap = 0;
    bool commit = false;
    auto* reversal = app.add_subcommand("reversal", "rank reversals caused by added alternatives");
    add_common(reversal, common);
    reversal->add_option("--additions", additions, "added alternatives: CSV rows id,c1,...,cd or a JSON array")->required();
    reversal->add_option("--gap", gap, "outlier rank gap (default ceil(N/4))");
    reversal->callback([&] {
        command = "reversal";
        build = [&] {
            Json req = base_request(common, store);
            req["additions"] = read_additions(additions);
            if (gap > 0) {
                req["gap"] = gap;
            }
            return req;
        };
    });
    auto* whatif = app.add_subcommand("whatif", "add or remove alternatives and compare the rankings");
    add_common(whatif, common);
    whatif->add_option("--additions", additions, "added alternatives: CSV rows id,c1,...,cd or a JSON array");
    whatif->add_option("--remove", removals, "id of an alternative to drop");
    whatif->add_flag("--commit", commit, "store the edited set as the next revision (needs --dataset)");
    whatif->callback([&] {
        command = "whatif";
        build = [&] {
            Json req = base_request(common, store);
            if (!additions.empty()) {
                req["additions"] = read_additions(additions);
            }
            if (!removals.empty()) {
                req["removals"] = removals;
            }
            if (commit) {
                req["commit"] = true;
            }
            return req;
        };
    });

    // classify
    auto* classify = app.add_subcommand("classify", "level sets, alpha-best, good/bad/ugly, threshold model");
    add_common(classify, common);
    std::string alpha;
    std::size_t level = 0;
    bool level_given = false;
    classify->add_option("--alpha", alpha, "alpha-best percentage in (0, 100]");
    auto* level_opt = classify->add_option("--n", level, "level-set threshold");
    classify->callback([&] {
        command = "classify";
        level_given = level_opt->count() > 0;
        build = [&] {
            Json req = base_request(common, store);
            if (!alpha.empty()) {
                req["alpha"] = alpha;
            }
            if (level_given) {
                req["n"] = level;
            }
            return req;
        };
    });

    // align
    auto* align = app.add_subcommand("align", "rotate the cone onto the SVM normal of the labeled data");
    add_common(align, common);
    align->callback([&] {
        command = "align";
        build = [&] { return base_request(common, store); };
    });

    // compare
    auto* compare = app.add_subcommand("compare", "TOPSIS, weighted sum and cone rank side by side");
    add_common(compare, common);
    std::string weights;
    std::string senses;
    bool as_csv = false;
    compare->add_option("--weights", weights, "weights w1,w2,... (must lie in the dual cone)");
    compare->add_option("--senses", senses, "benefit or cost per criterion, comma separated");
    compare->add_flag("--csv", as_csv, "print the table as CSV instead of JSON");
    compare->callback([&] {
        command = "compare";
        build = [&] {
            Json req = base_request(common, store);
            if (!weights.empty()) {
                req["weights"] = split_list(weights);
            }
            if (!senses.empty()) {
                req["senses"] = split_list(senses);
            }
            return req;
        };
    });

    // request: raw JSON request, the same body the service takes
    auto* request = app.add_subcommand("request", "run a JSON request body through a command");
    std::string request_command;
    std::string request_file;
    request->add_option("command", request_command, "rank, setrank, whatif, reversal, classify, align or compare")->required();
    request->add_option("file", request_file, "request JSON file")->required();
    request->add_option("--store", common.store, "store directory for dataset references");
    request->callback([&] {
        command = request_command;
        build = [&] {
            Json req = read_json(request_file);
            if (req.contains("dataset")) {
                store = std::make_unique<Store>(common.store);
            }
            return req;
        };
    });

    // ingest / show
    auto* ingest = app.add_subcommand("ingest", "validate a CSV file and add it to the store");
    std::string ingest_file;
    ingest->add_option("data", ingest_file, "CSV file")->required();
    ingest->add_option("--store", common.store, "store directory");
    auto* show = app.add_subcommand("show", "print a stored dataset");
    std::string show_id;
    show->add_option("id", show_id, "dataset id")->required();
    show->add_option("--store", common.store, "store directory");
    show->add_option("--revision", common.revision, "revision (default latest)");

    // serve
    auto* serve = app.add_subcommand("serve", "run the HTTP service");
    int port = 8080;
    std::string host = "127.0.0.1";
    std::size_t workers = 0;
    serve->add_option("--port", port, "port");
    serve->add_option("--host", host, "bind address");
    serve->add_option("--store", common.store, "store directory");
    serve->add_option("--workers", workers, "worker threads (default: hardware concurrency)");

    // cohort
    auto* cohort = app.add_subcommand("cohort", "print a synthetic cohort as CSV");
    std::string kind = "students";
    std::size_t cohort_n = 60;
    double margin = 0.5;
    cohort->add_option("--kind", kind, "students or separable")->check(CLI::IsMember({"students", "separable"}));
    cohort->add_option("--n", cohort_n, "number of alternatives");
    cohort->add_option("--seed", seed, "generator seed");
    cohort->add_option("--margin", margin, "class margin for separable cohorts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ErrorKind::validation);
    }

    try {
        if (build) {
            Json req = build();
            auto r = handle(command, req, store.get());
            if (r.exit_code == 0 && command == "compare" && as_csv) {
                std::cout << "id,topsis,weighted_sum,cone_rank\n";
                for (const auto& row : r.body["rows"]) {
                    std::cout << row["id"].get<std::string>() << ',' << row["topsis"].dump() << ','
                              << row["weighted_sum_exact"].get<std::string>() << ',' << row["cone_rank"].dump() << '\n';
                }
                return 0;
            }
            int code = emit(r);
            if (code == 0 && command == "rank" && !plot.empty()) {
                std::ofstream(plot) << plot_svg(r.body["plot"]);
                auto json_path = std::filesystem::path(plot).replace_extension(".json");
                std::ofstream(json_path) << dump(r.body["plot"]);
            }
            return code;
        }
        if (ingest->parsed()) {
            Store s(common.store);
            auto in = s.ingest(parse_csv(read_file(ingest_file)));
            Json doc = dataset_json(in.dataset);
            doc["created"] = in.created;
            std::cout << dump(doc);
            return 0;
        }
        if (show->parsed()) {
            Store s(common.store);
            auto latest = s.latest_revision(show_id);
            if (latest == 0) {
                throw StoreError(StoreError::Code::not_found, "unknown dataset '" + show_id + "'");
            }
            auto ds = s.load(show_id, common.revision ? common.revision : latest);
            if (!ds) {
                throw StoreError(StoreError::Code::not_found, "dataset '" + show_id + "' has no revision " + std::to_string(common.revision));
            }
            Json doc = dataset_json(*ds);
            doc["latest_revision"] = latest;
            std::cout << dump(doc);
            return 0;
        }
        if (serve->parsed()) {
            Service svc(common.store, workers);
            std::cerr << "conerank: serving on http://" << host << ':' << port << " (store " << common.store << ")\n";
            return svc.listen(host, port) ? 0 : 1;
        }
        if (cohort->parsed()) {
            Dataset ds;
            if (kind == "students") {
                ds.criteria = {"mark", "credits"};
                ds.alternatives = AlternativeSet::from_points(student_cohort(cohort_n, seed));
            } else {
                auto c = separable_cohort(cohort_n, margin, seed);
                ds.criteria = {"c1", "c2"};
                ds.alternatives = AlternativeSet::from_points(c.points);
                ds.labels = c.labels;
            }
            std::cout << to_csv(ds);
            return 0;
        }
    } catch (const Error& e) {
        return emit(error_response(e));
    }
    return 0;
}
