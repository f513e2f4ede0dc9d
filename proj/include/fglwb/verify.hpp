// The verification suites behind `fglwb verify`.
#pragma once

#include "fglwb/workbench.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fglwb {

enum class Suite { Combinat, Fgl, Genera, Su, All };

std::optional<Suite> suite_from_name(const std::string& name);

/// Upper bound for the gcd law checks, independent of N.
inline constexpr int kCombinatBound = 64;

std::vector<Report> verify_combinat(Workbench& wb, int bound = kCombinatBound);
std::vector<Report> verify_fgl(Workbench& wb);
std::vector<Report> verify_genera(Workbench& wb);
std::vector<Report> verify_su(Workbench& wb);

std::vector<Report> run_verify(Suite suite, Workbench& wb);

/// Every table in the cache, restricted to the shared range, must equal the
/// freshly computed one.
Report cache_agreement(const CacheFile& cached, Workbench& fresh);

/// The Chern number tables for weight 2, 3 and 4 products: (class, partition, value).
struct ChernTableEntry {
    std::string manifold;
    std::vector<int> partition;
    long value;
};
const std::vector<ChernTableEntry>& reference_chern_tables();

/// Residual of (y g'' + g')^2 - g'^2 (1 + q1 y g' + ... + q4 y^4 g'^4) through y^order.
PolySeries kh_log_residual(const PolySeries& g, int order);

}  // namespace fglwb
