#ifndef CURVECOUNT_CACHE_HPP
#define CURVECOUNT_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "curvecount/serialize.hpp"

namespace curvecount {

/// Content-addressed table cache. Disabled unless a directory is configured
/// (flag or the CURVECOUNT_CACHE environment variable). Entries are keyed by
/// a hash of the semantic config string, versioned, and revalidated against
/// the full key on load; writes go through a temp file and an atomic rename.
class TableCache {
public:
    static constexpr int kVersion = 1;

    TableCache() = default;
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

    /// Cache configured from --cache-dir if non-empty, else CURVECOUNT_CACHE,
    /// else disabled.
    static TableCache from_env(const std::string& flag_dir);

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    /// Payload for this key, or nullopt on miss, version skew, key mismatch
    /// or unreadable entry (the caller recomputes). A present-but-unusable
    /// entry is reported to `warn` when given.
    std::optional<Json> load(const std::string& key, std::ostream* warn = nullptr) const;

    void store(const std::string& key, const Json& payload) const;

    static std::string hash_key(const std::string& key);

private:
    std::filesystem::path dir_;
    bool enabled_ = false;
};

} // namespace curvecount

#endif
