#pragma once

#include <string>
#include <vector>

#include "chv/config.hpp"
#include "chv/diff.hpp"
#include "chv/report.hpp"
#include "chv/sampling.hpp"

namespace chv {

// Per-sample statistics. Checks aggregate these over substreams; unit tests
// exercise them directly on hand-built samples.

struct PairStat {
    double value = 0.0;   // the per-pair statistic
    double k = 0.0;       // comparison metric of the pair
    bool degenerate = false;
};

// | |Dw(a)|^2 - |Dw(b)|^2 | / k        (claimed <= 16)
PairStat grad_lipschitz_stat(const PairSample& s, double r_min);
// ||m1|| / k                           (claimed >= 1/8)
PairStat hessian_separation_stat(const PairSample& s, double r_min);
// ||m2|| / k                           (claimed <= 10; see notes in check)
PairStat scaled_hessian_stat(const PairSample& s, double r_min);

struct RatioStat {
    double ratio = 0.0;       // max(-L1/L5, -L5/L1) when hyperbolic
    bool degenerate = false;  // matrix norm below the check threshold
    bool hyperbolic = false;  // L1 > 0 > L5
    double lower_margin = 0.0;  // min(L1, -L5) * C / ||N||
};
// Spectral ratio of m1 (threshold 1e-10, C = 1000).
RatioStat hessian_diff_ratio_stat(const PairSample& s, double delta,
                                  double r_min);
// Spectral ratio of a_diff (threshold 1e-8).
RatioStat hyperbolicity_stat(const PairSample& s, double delta, double c,
                             double r_min);

struct DecompStat {
    double identity_rel_err = 0.0;  // a_diff vs c*m1 + m2 - (1/2)grad_diff*I
    bool degenerate = false;        // k below threshold
    bool premises_hold = false;     // the three per-pair estimates all hold
    double chain_margin = 0.0;      // L1(a_diff) - 4k, when premises hold
    double weyl_gap = 0.0;  // L1(a_diff) - (c||m1||/1000 - ||m2|| - |gd|)
};
DecompStat decomposition_stat(const PairSample& s, double delta, double c,
                              double r_min);

// |grad P(x)|^2 / |x|^4, constant by the eiconal property.
double eiconal_ratio(const Vec5& x);

// Deterministic per-index sample constructors: sample k of a run with a
// given seed always comes from the substream keyed by k, so witnesses and
// per-sample dumps can be regenerated without replaying the whole run.
Vec5 nth_sphere_sample(std::uint64_t seed, std::uint64_t k);
Vec5 nth_annulus_sample(std::uint64_t seed, std::uint64_t k, double r_min);
PairSample nth_pair_sample(std::uint64_t seed, std::uint64_t k, double r_min);

// Violation amount of the difference-spectrum bounds on the k-th random
// pair of symmetric matrices (negative or tiny when the bounds hold).
double weyl_stat(std::uint64_t seed, std::uint64_t k);

// Registry of named checks. delta_req constrains which --delta values a
// check accepts; in_all marks membership in the "all" suite; dumpable marks
// support for per-sample CSV dumps.
enum class DeltaReq { kAny, kHalfOnly, kHalfToOne };

struct CheckDef {
    const char* name;
    CheckReport (*fn)(const RunConfig&);
    DeltaReq delta_req;
    bool in_all;
    bool dumpable;
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& name);

// The fixed counterexample at delta = 0 (ignores cfg.delta and cfg.c).
CheckReport counterexample_delta0(const RunConfig& cfg);

}  // namespace chv
