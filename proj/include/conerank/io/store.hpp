#pragma once

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include "conerank/io/dataset.hpp"
#include "conerank/io/json.hpp"

namespace conerank::io {

/// Errors that only exist once datasets live in a store. For the CLI they are
/// input errors (exit 2); the service maps them to their own statuses.
class StoreError : public Error {
public:
    enum class Code { not_found, conflict };

    StoreError(Code code, const std::string& what) : Error(ErrorKind::validation, what), code_(code) {}
    Code code() const noexcept { return code_; }

private:
    Code code_;
};

inline std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    require(EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) == 1, ErrorKind::validation,
            "SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

inline std::string utc_now()
{
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Append-only dataset store: <root>/<id>/rev-<n>.json. The id is a prefix of
/// the SHA-256 of the first revision's canonical CSV, so ingesting the same
/// content twice yields the same dataset.
class Store {
public:
    explicit Store(std::filesystem::path root) : root_(std::move(root))
    {
        std::error_code ec;
        std::filesystem::create_directories(root_, ec);
        require(!ec && std::filesystem::is_directory(root_), ErrorKind::validation,
                "store directory '" + root_.string() + "' is not writable");
    }

    const std::filesystem::path& root() const noexcept { return root_; }

    struct Ingested {
        Dataset dataset;
        bool created = false;
    };

    Ingested ingest(Dataset ds)
    {
        const std::string content = to_csv(ds);
        const std::string id = sha256_hex(content).substr(0, 16);
        auto lock = lock_for(id);
        if (auto rev = latest_revision(id); rev > 0) {
            return {*load(id, rev), false};
        }
        ds.id = id;
        ds.revision = 1;
        ds.created_at = utc_now();
        write(ds, content);
        return {std::move(ds), true};
    }

    /// 0 when the dataset does not exist.
    std::size_t latest_revision(const std::string& id) const
    {
        if (!valid_id(id)) {
            return 0;
        }
        std::size_t rev = 0;
        while (std::filesystem::exists(path_of(id, rev + 1))) {
            ++rev;
        }
        return rev;
    }

    std::optional<Dataset> load(const std::string& id, std::size_t revision) const
    {
        if (!valid_id(id) || revision == 0) {
            return std::nullopt;
        }
        std::ifstream in(path_of(id, revision));
        if (!in) {
            return std::nullopt;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_dataset_json(Json::parse(buf.str()));
    }

    /// Latest revision, or the given one; throws not_found / conflict.
    Dataset get(const std::string& id, std::optional<std::size_t> revision = std::nullopt) const
    {
        auto latest = latest_revision(id);
        if (latest == 0) {
            throw StoreError(StoreError::Code::not_found, "unknown dataset '" + id + "'");
        }
        if (revision && *revision != latest) {
            throw StoreError(StoreError::Code::conflict, "dataset '" + id + "' is at revision " + std::to_string(latest) +
                                                             ", request names revision " + std::to_string(*revision));
        }
        return *load(id, latest);
    }

    /// Appends a revision. `expected` must be the current latest revision.
    Dataset commit(const std::string& id, std::size_t expected, Dataset next)
    {
        auto lock = lock_for(id);
        auto current = get(id, expected);
        next.id = id;
        next.revision = current.revision + 1;
        next.created_at = utc_now();
        if (next.criteria.empty()) {
            next.criteria = current.criteria;
        }
        write(next, to_csv(next));
        return next;
    }

private:
    static bool valid_id(const std::string& id)
    {
        return id.size() == 16 && id.find_first_not_of("0123456789abcdef") == std::string::npos;
    }

    std::filesystem::path path_of(const std::string& id, std::size_t rev) const
    {
        return root_ / id / ("rev-" + std::to_string(rev) + ".json");
    }

    void write(const Dataset& ds, const std::string& content)
    {
        auto target = path_of(ds.id, ds.revision);
        std::filesystem::create_directories(target.parent_path());
        require(!std::filesystem::exists(target), ErrorKind::validation, "revision file already exists: " + target.string());
        Json doc = dataset_json(ds);
        doc["sha256"] = sha256_hex(content);
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            require(static_cast<bool>(out), ErrorKind::validation, "cannot write " + tmp.string());
            out << dump(doc);
        }
        std::filesystem::rename(tmp, target);
    }

    std::unique_lock<std::mutex> lock_for(const std::string& id)
    {
        std::lock_guard<std::mutex> guard(map_mutex_);
        auto& m = locks_[id];
        if (!m) {
            m = std::make_unique<std::mutex>();
        }
        return std::unique_lock<std::mutex>(*m);
    }

    std::filesystem::path root_;
    std::mutex map_mutex_;
    std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

} // namespace conerank::io
