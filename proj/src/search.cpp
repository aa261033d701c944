#include "chv/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "chv/checks.hpp"
#include "chv/ortho.hpp"

namespace chv {

namespace {

struct Params {
    Vec5 a{};
    Vec5 b{};
    SkewParam s{};
    OrthoMat5 base;
};

struct Objective {
    double value = -1.0;  // ratios are always >= 1, so -1 marks degenerate
    bool nonhyperbolic = false;
};

Objective evaluate(const Params& t, double delta, double c, double r_min) {
    PairSample sample{t.a, t.b, t.base * skew_exp(t.s)};
    const RatioStat st = hyperbolicity_stat(sample, delta, c, r_min);
    Objective o;
    if (st.degenerate) return o;
    if (!st.hyperbolic) {
        o.nonhyperbolic = true;
        o.value = std::numeric_limits<double>::max();
        return o;
    }
    o.value = st.ratio;
    return o;
}

bool in_annulus(const Vec5& x, double r_min) {
    const double r = norm(x);
    return r >= r_min && r <= 1.0;
}

struct RestartOutcome {
    double value = -1.0;
    Params params;
    std::uint64_t evals = 0;
    std::uint64_t nonhyperbolic = 0;
};

RestartOutcome run_restart(std::uint64_t seed, std::uint64_t k, double delta,
                           double c, std::uint64_t iters, double r_min) {
    RestartOutcome out;
    const PairSample init = nth_pair_sample(seed, k, r_min);
    Params t{init.a, init.b, {}, init.o};

    Objective best = evaluate(t, delta, c, r_min);
    ++out.evals;
    if (best.nonhyperbolic) ++out.nonhyperbolic;

    double step_point = 0.05;
    double step_skew = 0.1;
    for (std::uint64_t sweep = 0; sweep < iters; ++sweep) {
        bool improved = false;
        for (int coord = 0; coord < 20; ++coord) {
            for (double sign : {1.0, -1.0}) {
                Params cand = t;
                if (coord < 5) {
                    cand.a[coord] += sign * step_point;
                    if (!in_annulus(cand.a, r_min)) continue;
                } else if (coord < 10) {
                    cand.b[coord - 5] += sign * step_point;
                    if (!in_annulus(cand.b, r_min)) continue;
                } else {
                    cand.s[coord - 10] += sign * step_skew;
                }
                const Objective obj = evaluate(cand, delta, c, r_min);
                ++out.evals;
                if (obj.nonhyperbolic) ++out.nonhyperbolic;
                if (obj.value > best.value) {
                    best = obj;
                    t = cand;
                    improved = true;
                }
            }
        }
        if (!improved) {
            step_point *= 0.5;
            step_skew *= 0.5;
            if (step_point < 1e-5) break;
        }
    }
    out.value = best.value;
    out.params = t;
    return out;
}

}  // namespace

SearchResult worst_ratio_search(double delta, double c, std::uint64_t iters,
                                std::uint64_t restarts, std::uint64_t seed,
                                double r_min, int threads) {
    const std::uint64_t n = std::max<std::uint64_t>(restarts, 1);
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    std::uint64_t nt = threads > 0 ? static_cast<std::uint64_t>(threads)
                                   : static_cast<std::uint64_t>(hw);
    nt = std::min<std::uint64_t>({nt, n, 64});

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(n));
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t k = lo; k < hi; ++k)
            outcomes[static_cast<std::size_t>(k)] =
                run_restart(seed, k, delta, c, iters, r_min);
    };
    if (nt <= 1) {
        worker(0, n);
    } else {
        std::vector<std::thread> workers;
        for (std::uint64_t i = 0; i < nt; ++i)
            workers.emplace_back(worker, n * i / nt, n * (i + 1) / nt);
        for (auto& w : workers) w.join();
    }

    SearchResult res;
    std::uint64_t best_index = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        res.evals += outcomes[k].evals;
        res.nonhyperbolic += outcomes[k].nonhyperbolic;
        if (outcomes[k].value > outcomes[best_index].value) best_index = k;
    }
    const RestartOutcome& best = outcomes[best_index];
    res.value = best.value;
    res.restart = best_index;
    res.witness = PairSample{best.params.a, best.params.b,
                             best.params.base * skew_exp(best.params.s)};
    return res;
}

}  // namespace chv
