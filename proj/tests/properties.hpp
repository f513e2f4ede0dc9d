// Randomized property suites shared by the unit tests and the acceptance runner.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fglwb::props {

inline constexpr std::uint64_t kSeed = 0x9e3779b97f4a7c15ULL;
inline constexpr int kCasesPerFamily = 400;

struct Outcome {
    std::string family;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

Outcome series_identities(std::uint64_t seed, int cases);
Outcome ring_axioms(std::uint64_t seed, int cases);
Outcome homogeneity(std::uint64_t seed, int cases);
Outcome parser_round_trip(std::uint64_t seed, int cases);
Outcome cache_round_trip(std::uint64_t seed, int cases);

/// All families, each with its own stream derived from seed.
std::vector<Outcome> run_all(std::uint64_t seed = kSeed, int cases_per_family = kCasesPerFamily);

}  // namespace fglwb::props
