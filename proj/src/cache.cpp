#include "curvecount/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace curvecount {

TableCache TableCache::from_env(const std::string& flag_dir) {
    if (!flag_dir.empty()) return TableCache(flag_dir);
    if (const char* env = std::getenv("CURVECOUNT_CACHE"); env && *env)
        return TableCache(env);
    return TableCache();
}

std::string TableCache::hash_key(const std::string& key) {
    // FNV-1a 64-bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::optional<Json> TableCache::load(const std::string& key, std::ostream* warn) const {
    if (!enabled_) return std::nullopt;
    std::filesystem::path file = dir_ / (hash_key(key) + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    auto degraded = [&](const char* why) -> std::optional<Json> {
        if (warn) *warn << "cache entry " << file.string() << " " << why << ", recomputing\n";
        return std::nullopt;
    };
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return degraded("is corrupt");
    if (!j.is_object() || j.value("version", -1) != kVersion) return degraded("has a stale version");
    if (j.value("key", "") != key) return degraded("collides on hash");
    if (!j.contains("payload")) return degraded("has no payload");
    return j.at("payload");
}

void TableCache::store(const std::string& key, const Json& payload) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    Json j{{"version", kVersion}, {"key", key}, {"payload", payload}};
    std::filesystem::path file = dir_ / (hash_key(key) + ".json");
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return; // caching is best-effort
        out << j.dump();
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace curvecount
