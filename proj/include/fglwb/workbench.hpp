// Lazily computed tables at a fixed weight bound, with cache conversion.
#pragma once

#include "fglwb/cache.hpp"
#include "fglwb/genera.hpp"
#include "fglwb/suw.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fglwb {

/// Table names used in cache files.
inline const std::vector<std::string> kCacheTableNames = {"alpha", "map.abelian", "map.buchstaber", "pairing",
                                                          "w.bnd", "w.cls"};

/// Keeps the rows of a named table that lie in the range for weight bound N.
CacheTable restrict_table(const CacheTable& table, int N);

class Workbench {
public:
    explicit Workbench(int N);

    int N() const { return N_; }
    const FGLTable& fgl();
    const PairingTable& pairing();
    const WTable& w();
    const ClassifyingMap& buchstaber();
    const ClassifyingMap& abelian();

    /// Cache form of one table; computes it if needed.
    CacheTable table(const std::string& name);
    /// Tables computed or loaded so far.
    CacheFile to_cache() const;
    /// Seeds tables from a cache built at N' >= N. Throws CacheError on bad entries.
    void adopt(const CacheFile& file);

private:
    int N_;
    std::optional<FGLTable> fgl_;
    std::optional<PairingTable> pairing_;
    std::optional<WTable> w_;
    std::optional<ClassifyingMap> buchstaber_, abelian_;

    CacheTable table_of(const std::string& name) const;
    bool has(const std::string& name) const;
};

struct CacheOptions {
    bool enabled = true;
    std::filesystem::path dir;

    std::filesystem::path file() const { return dir / kCacheFileName; }
};

/// A workbench seeded from the cache where possible. Unusable cache files are
/// reported in warnings and ignored.
Workbench open_workbench(int N, const CacheOptions& opts, std::vector<std::string>& warnings);

/// Merges the workbench tables into the cache file when that adds information.
/// Throws CacheError on I/O failure.
void save_workbench(const Workbench& wb, const CacheOptions& opts);

}  // namespace fglwb
