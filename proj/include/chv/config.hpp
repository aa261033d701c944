#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chv/cubic.hpp"

namespace chv {

// Shared run parameters. The digest below covers exactly the fields that
// change results (delta, c, samples, seed, r_min, grid_step, checks);
// output routing and thread count are excluded on purpose, since results
// are bit-identical regardless of where they are written or how many
// workers compute them.
struct RunConfig {
    double delta = kDefaultDelta;
    double c = kDefaultC;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    double r_min = kDefaultRmin;
    double grid_step = 1e-4;
    std::vector<std::string> checks;  // empty or {"all"} selects the suite

    int threads = 0;  // 0 = hardware concurrency
    std::string output;
    std::string format = "json";
};

// Validates ranges: delta in [0,1), c > 0, samples >= 1, r_min in (0, 0.5),
// grid_step in (0, 1e-3], format json|csv. Returns an empty string when
// valid, otherwise a message describing the first problem.
std::string validate(const RunConfig& cfg);

// FNV-1a 64-bit over the canonical rendering of the semantic parameters.
std::uint64_t config_digest(const RunConfig& cfg);

}  // namespace chv
