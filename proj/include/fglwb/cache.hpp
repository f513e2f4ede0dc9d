// On-disk table cache: versioned text, crc32 checksum, atomic replace.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fglwb {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheFileName = "fglwb-tables.cache";

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rows are (key, value) in a fixed order; neither may contain tabs or newlines.
struct CacheTable {
    std::string name;
    std::vector<std::pair<std::string, std::string>> rows;
    bool operator==(const CacheTable&) const = default;
};

struct CacheFile {
    int version = kCacheFormatVersion;
    int N = 0;
    std::vector<CacheTable> tables;

    const CacheTable* find(const std::string& name) const;
    /// Inserts or replaces by name, keeping tables sorted by name.
    void put(CacheTable table);
    bool operator==(const CacheFile&) const = default;
};

std::string serialize_cache(const CacheFile& file);

/// Throws CacheError on a bad header, unsupported version, malformed row,
/// missing trailer or checksum mismatch.
CacheFile parse_cache(const std::string& bytes);

/// Writes to a temporary file in the same directory, then renames over path.
void store_cache(const CacheFile& file, const std::filesystem::path& path);

CacheFile load_cache(const std::filesystem::path& path);

/// $FGLWB_CACHE_DIR, else $XDG_CACHE_HOME/fglwb, else $HOME/.cache/fglwb, else ./.fglwb-cache.
std::filesystem::path default_cache_dir();

}  // namespace fglwb
