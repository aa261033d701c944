#pragma once

#include <cstdint>

#include "chv/sampling.hpp"

namespace chv {

struct SearchResult {
    double value = 0.0;       // best ratio found
    PairSample witness;       // pair and frame achieving it
    std::uint64_t restart = 0;
    std::uint64_t evals = 0;
    std::uint64_t nonhyperbolic = 0;  // objective evaluations with L1 <= 0
                                      // or L5 >= 0 (never seen in practice)
};

// Adversarial maximization of the conformal-Hessian eigenvalue ratio by
// coordinate descent over the 20 parameters (a, b, skew coordinates of the
// frame). Restart k starts exactly at Monte Carlo sample k of the same
// seed, so the result dominates plain sampling under the same seed budget.
SearchResult worst_ratio_search(double delta, double c, std::uint64_t iters,
                                std::uint64_t restarts, std::uint64_t seed,
                                double r_min, int threads);

}  // namespace chv
