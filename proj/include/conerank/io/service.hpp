#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <thread>

#include <httplib.h>

#include "conerank/io/api.hpp"

namespace conerank::io {

/// REST front end over a Store. Every JSON body is produced by the handlers in
/// api.hpp, exactly as the CLI prints them.
class Service {
public:
    explicit Service(std::filesystem::path store_dir, std::size_t workers = 0) : store_(std::move(store_dir))
    {
        workers = workers ? workers : std::max(2u, std::thread::hardware_concurrency());
        // Bounded pool: at most 64 queued requests beyond the running ones.
        server_.new_task_queue = [workers] { return new httplib::ThreadPool(workers, 64); };
        server_.set_payload_max_length(64 << 20);
        routes();
    }

    /// Binds and serves until stop(); port 0 picks a free port.
    bool listen(const std::string& host, int port) { return server_.listen(host, port); }

    int bind_any(const std::string& host = "127.0.0.1") { return server_.bind_to_any_port(host); }
    bool serve_bound() { return server_.listen_after_bind(); }
    void stop() { server_.stop(); }
    void wait_until_ready() { server_.wait_until_ready(); }

    Store& store() { return store_; }

private:
    static void reply(httplib::Response& res, int status, const Json& body)
    {
        res.status = status;
        res.set_content(dump(body), "application/json");
    }

    static void reply(httplib::Response& res, const Response& r) { reply(res, r.status, r.body); }

    void post_command(const std::string& path, const std::string& command)
    {
        server_.Post(path, [this, command](const httplib::Request& req, httplib::Response& res) {
            Json body;
            try {
                body = Json::parse(req.body);
            } catch (const nlohmann::json::exception& e) {
                reply(res, error_response(Error(ErrorKind::validation, std::string("malformed JSON: ") + e.what())));
                return;
            }
            if (req.has_param("commit")) {
                if (!body.is_object()) {
                    reply(res, error_response(Error(ErrorKind::validation, "request body must be a JSON object")));
                    return;
                }
                body["commit"] = req.get_param_value("commit") == "true";
            }
            reply(res, handle(command, body, &store_));
        });
    }

    void routes()
    {
        server_.Get("/health", [](const httplib::Request&, httplib::Response& res) {
            reply(res, 200, Json{{"status", "ok"}});
        });

        server_.Post("/datasets", [this](const httplib::Request& req, httplib::Response& res) {
            try {
                auto in = store_.ingest(parse_csv(req.body));
                Json doc = dataset_json(in.dataset);
                doc["created"] = in.created;
                reply(res, in.created ? 201 : 200, doc);
            } catch (const Error& e) {
                reply(res, error_response(e));
            }
        });

        server_.Get(R"(/datasets/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            try {
                const std::string id = req.matches[1];
                auto latest = store_.latest_revision(id);
                if (latest == 0) {
                    throw StoreError(StoreError::Code::not_found, "unknown dataset '" + id + "'");
                }
                std::size_t rev = latest;
                if (req.has_param("revision")) {
                    try {
                        rev = std::stoul(req.get_param_value("revision"));
                    } catch (const std::exception&) {
                        fail(ErrorKind::validation, "revision must be a positive integer");
                    }
                }
                auto ds = store_.load(id, rev);
                if (!ds) {
                    throw StoreError(StoreError::Code::not_found,
                                     "dataset '" + id + "' has no revision " + std::to_string(rev));
                }
                Json doc = dataset_json(*ds);
                doc["latest_revision"] = latest;
                reply(res, 200, doc);
            } catch (const Error& e) {
                reply(res, error_response(e));
            }
        });

        for (const char* cmd : {"rank", "setrank", "whatif", "reversal", "classify", "align", "compare"}) {
            post_command(std::string("/") + cmd, cmd);
        }
    }

    Store store_;
    httplib::Server server_;
};

} // namespace conerank::io
