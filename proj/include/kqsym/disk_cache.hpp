#pragma once

// On-disk cache of MatrixDocuments, one json file per (kind, k, n, schema).
// Writes go to a temporary file that is renamed into place, so concurrent
// writers never expose a partial file.

#include "kqsym/document.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>
#include <unistd.h>

namespace kqsym {

inline constexpr const char* kCacheDirVariable = "KQSYM_CACHE_DIR";

/// $KQSYM_CACHE_DIR, else $XDG_CACHE_HOME/kqsym, else $HOME/.cache/kqsym.
inline std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv(kCacheDirVariable); dir && *dir)
        return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "kqsym";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "kqsym";
    return std::filesystem::temp_directory_path() / "kqsym-cache";
}

class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path path_for(MatrixKind kind, Bound k, int n) const {
        return dir_ / (std::string(matrix_kind_name(kind)) + "-k" + k.to_string() + "-n" + std::to_string(n) + "-v" +
                       kSchemaVersion + ".json");
    }

    /// A stored document matching the key, or nothing if absent or unreadable.
    std::optional<MatrixDocument> load(MatrixKind kind, Bound k, int n) const {
        std::ifstream in(path_for(kind, k, n));
        if (!in)
            return std::nullopt;
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            MatrixDocument doc = document_from_json(buffer.str());
            if (doc.kind != kind || doc.k != k || doc.n != n || doc.schema_version != kSchemaVersion)
                return std::nullopt;
            return doc;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    /// Returns false if the document could not be written; the cache is
    /// optional, so callers may ignore that.
    bool store(const MatrixDocument& doc) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec)
            return false;
        const auto target = path_for(doc.kind, doc.k, doc.n);
        static std::atomic<unsigned> counter{0};
        const auto tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                         std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
                         std::to_string(counter++);
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                return false;
            out << to_json(doc);
            if (!out.flush())
                return false;
        }
        std::filesystem::rename(tmp, target, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            return false;
        }
        return true;
    }

private:
    std::filesystem::path dir_;
};

} // namespace kqsym
