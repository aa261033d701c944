// Acceptance harness: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion with the measured quantities.
// The process exit code is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>

#include "chv/checks.hpp"
#include "chv/config.hpp"
#include "chv/cubic.hpp"
#include "chv/eigen.hpp"
#include "chv/run.hpp"
#include "chv/search.hpp"
#include "chv/spectra.hpp"

using namespace chv;

namespace {

int g_failures = 0;
int g_index = 0;

void report(bool ok, const char* title, const char* fmt, ...) {
    ++g_index;
    if (!ok) ++g_failures;
    std::printf("[%s] %02d %s: ", ok ? "PASS" : "FAIL", g_index, title);
    va_list ap;
    va_start(ap, fmt);
    std::vprintf(fmt, ap);
    va_end(ap);
    std::printf("\n");
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

double max_abs_dev(const std::array<double, 5>& a,
                   const std::array<double, 5>& b) {
    double dev = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        dev = std::max(dev, std::abs(a[i] - b[i]));
    return dev;
}

// 1. Ordered closed-form spectrum vs Jacobi eigenvalues of the autodiff
//    Hessian at 1e4 random unit points, delta = 1/2, within 1e-7, < 10 s.
void criterion_spectrum_autodiff() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t n = 10000;
    double dev = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const Vec5 x = nth_sphere_sample(0, k);
        const auto analytic = ordered_spectrum_half(recover_p(x));
        const auto measured = jacobi_spectrum(w_autodiff(x, 0.5).hess);
        dev = std::max(dev, max_abs_dev(analytic, measured));
    }
    const double secs = seconds_since(t0);
    report(dev < 1e-7 && secs < 10.0, "spectrum vs autodiff Hessian",
           "max deviation %.3g (bound 1e-7) over %llu unit points in %.2f s "
           "(budget 10 s)",
           dev, static_cast<unsigned long long>(n), secs);
}

// 2. delta = 0 spectrum at e1 is (2,2,2,-7,-7) within 1e-9 and the
//    counterexample difference matrix has eigenvalues
//    (-5.75,-5.75,-5.75,-10.25,-10.25), all negative, within 1e-9.
void criterion_delta0_endpoint() {
    const Vec5 e1 = {1, 0, 0, 0, 0};
    const SymMat5 h = hess_w(e1, 0.0);
    const auto spec = jacobi_spectrum(h);
    const std::array<double, 5> want_h = {2, 2, 2, -7, -7};
    const double dev_h = max_abs_dev(spec, want_h);

    const SymMat5 diff = 0.5 * h - 6.75 * Mat5::identity();
    const auto spec_d = jacobi_spectrum(diff);
    const std::array<double, 5> want_d = {-5.75, -5.75, -5.75, -10.25,
                                          -10.25};
    const double dev_d = max_abs_dev(spec_d, want_d);
    const bool negative = spec_d[0] < 0.0;

    report(dev_h <= 1e-9 && dev_d <= 1e-9 && negative,
           "flat-exponent endpoint and counterexample",
           "spectrum at e1 off (2,2,2,-7,-7) by %.3g, difference matrix off "
           "(-5.75 x3, -10.25 x2) by %.3g, top eigenvalue %.6g < 0 "
           "(tolerance 1e-9)",
           dev_h, dev_d, spec_d[0]);
}

// 3. The root of mu1 - mu4 in (0, 1) equals 5^(-1/4) within 1e-9, and the
//    general-exponent crossing formula gives the same value at delta = 1/2.
void criterion_crossing_location() {
    auto f = [](double p) {
        const auto mu = mu_spectrum_half(p);
        return mu[0] - mu[3];
    };
    double lo = 1e-6, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
    }
    const double root = 0.5 * (lo + hi);
    const double exact = std::pow(5.0, -0.25);
    const double formula = p0_threshold(0.5);
    report(std::abs(root - exact) < 1e-9 && std::abs(formula - exact) < 1e-9,
           "branch crossing location",
           "bisection root %.12f vs 5^(-1/4) = %.12f (|diff| %.3g, bound "
           "1e-9); closed formula at delta 1/2 off by %.3g",
           root, exact, std::abs(root - exact), std::abs(formula - exact));
}

// 4. On the p-grid with step 1e-4, max |d mu_i/dp| < 10 and > 5.06 (the
//    value -81/16 at p = 0 witnesses the lower bound), and the analytic
//    derivatives match finite differences within 1e-6.
void criterion_derivative_bound() {
    const double step = 1e-4, h = 1e-5;
    const std::uint64_t count =
        static_cast<std::uint64_t>(std::floor(2.0 / step)) + 1;
    double dmax = 0.0, fd_dev = 0.0;
    for (std::uint64_t k = 0; k < count; ++k) {
        const double p =
            k + 1 == count ? 1.0 : -1.0 + static_cast<double>(k) * step;
        const auto d = mu_derivatives_half(p);
        const auto up = mu_spectrum_half(p + h);
        const auto dn = mu_spectrum_half(p - h);
        for (std::size_t i = 0; i < 5; ++i) {
            dmax = std::max(dmax, std::abs(d[i]));
            fd_dev = std::max(
                fd_dev, std::abs(d[i] - (up[i] - dn[i]) / (2.0 * h)));
        }
    }
    const double at_zero = mu_derivatives_half(0.0)[3];
    report(dmax < 10.0 && dmax > 5.06 && std::abs(at_zero + 81.0 / 16.0) <
                                             1e-12 &&
               fd_dev < 1e-6,
           "branch derivative bound",
           "max |d mu/dp| = %.6f on %llu grid points (must lie in (5.06, "
           "10)); witness d4(0) = %.6f = -81/16; finite-difference deviation "
           "%.3g (bound 1e-6)",
           dmax, static_cast<unsigned long long>(count), at_zero, fd_dev);
}

// 5. 1e5 seeded pairs at delta = 1/2: |Delta |Du|^2| <= 16 K,
//    ||M1|| >= K/8, ||M2|| <= 10 K, zero violations, under 60 s.
//    The ||M2|| <= 10 K clause is genuinely false for this candidate (the
//    scaled difference does not vanish as the pair degenerates, so the
//    ratio is unbounded near K = 0); the criterion is evaluated as stated
//    and reports the honest failure.
void criterion_pairwise_bounds() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t n = 100000;
    const double r_min = 1e-3;
    double gmax = 0.0, smin = 1e300, mmax = 0.0;
    std::uint64_t gviol = 0, sviol = 0, mviol = 0, skipped = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const PairSample s = nth_pair_sample(0, k, r_min);
        const PairStat g = grad_lipschitz_stat(s, r_min);
        const PairStat m1 = hessian_separation_stat(s, r_min);
        const PairStat m2 = scaled_hessian_stat(s, r_min);
        if (g.degenerate || m1.degenerate || m2.degenerate) {
            ++skipped;
            continue;
        }
        gmax = std::max(gmax, g.value);
        smin = std::min(smin, m1.value);
        mmax = std::max(mmax, m2.value);
        if (g.value > 16.0) ++gviol;
        if (m1.value < 0.125) ++sviol;
        if (m2.value > 10.0) ++mviol;
    }
    const double secs = seconds_since(t0);
    const bool ok = gviol == 0 && sviol == 0 && mviol == 0 && secs < 60.0;
    report(ok, "pairwise comparison bounds",
           "max |Delta|Du|^2|/K = %.4f (<= 16, %llu violations); min "
           "||M1||/K = %.6f (>= 0.125, %llu violations); max ||M2||/K = "
           "%.4g (<= 10, %llu violations); %llu degenerate pairs skipped; "
           "%.1f s (budget 60 s)",
           gmax, static_cast<unsigned long long>(gviol), smin,
           static_cast<unsigned long long>(sviol), mmax,
           static_cast<unsigned long long>(mviol),
           static_cast<unsigned long long>(skipped), secs);
}

// 6. 1e5 pairs: the Hessian-difference spectral ratio -L1/L5 lies in
//    [1/1000, 1000] and the eigenvalue lower bounds hold with the same
//    constant.
void criterion_difference_ratio() {
    const std::uint64_t n = 100000;
    const double r_min = 1e-3;
    double rmax = 0.0, margin_min = 1e300;
    std::uint64_t nonhyp = 0, skipped = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const RatioStat st =
            hessian_diff_ratio_stat(nth_pair_sample(0, k, r_min), 0.5,
                                    r_min);
        if (st.degenerate) {
            ++skipped;
            continue;
        }
        if (!st.hyperbolic) {
            ++nonhyp;
            continue;
        }
        rmax = std::max(rmax, st.ratio);
        margin_min = std::min(margin_min, st.lower_margin);
    }
    report(nonhyp == 0 && rmax <= 1000.0 && margin_min >= 1.0 - 1e-12,
           "difference-spectrum ratio",
           "max two-sided ratio %.4f (<= 1000), min eigenvalue lower-bound margin %.6f "
           "(>= 1), %llu non-hyperbolic, %llu degenerate skipped",
           rmax, margin_min, static_cast<unsigned long long>(nonhyp),
           static_cast<unsigned long long>(skipped));
}

// 7. With c = 240000 at delta = 1/2: 1e5 samples plus a 100-restart
//    adversarial search keep the conformal-Hessian ratio inside
//    [4/240026, 240026/4]. The sharper value 6007 is reported for
//    information only.
void criterion_calibrated_ratio() {
    const std::uint64_t n = 100000;
    const double r_min = 1e-3, bound = 240026.0 / 4.0;
    double rmax = 0.0;
    std::uint64_t nonhyp = 0, skipped = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const RatioStat st = hyperbolicity_stat(
            nth_pair_sample(0, k, r_min), 0.5, 240000.0, r_min);
        if (st.degenerate) {
            ++skipped;
            continue;
        }
        if (!st.hyperbolic) {
            ++nonhyp;
            continue;
        }
        rmax = std::max(rmax, st.ratio);
    }
    const SearchResult sr =
        worst_ratio_search(0.5, 240000.0, 60, 100, 0, r_min, 0);
    const double overall = std::max(rmax, sr.value);
    report(nonhyp == 0 && sr.nonhyperbolic == 0 && overall <= bound,
           "calibrated constant ratio",
           "sampling max %.4f, search max %.4f after %llu evaluations "
           "(bound %.1f); empirical maximum %s the sharper informative "
           "value 6007; %llu non-hyperbolic",
           rmax, sr.value, static_cast<unsigned long long>(sr.evals), bound,
           overall <= 6007.0 ? "is below" : "exceeds",
           static_cast<unsigned long long>(nonhyp + sr.nonhyperbolic));
}

// 8. Identity suite: harmonicity to 1e-12, degree-3 Euler identities to
//    1e-10, the eiconal constant to 1e-10 (value recorded), and the
//    Laplacian trace identity to relative 1e-9 for several exponents.
void criterion_identities() {
    const std::uint64_t n = 2000;
    const double r_min = 1e-3;
    double harm = 0.0, euler_g = 0.0, euler_h = 0.0, eico = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
        const Vec5 x = nth_annulus_sample(2, k, r_min);
        harm = std::max(harm, std::abs(trace(hess_cartan(x))));
        const Vec5 g = grad_cartan(x);
        euler_g = std::max(
            euler_g, std::abs(dot(x, g) - 3.0 * cartan_cubic(x)));
        euler_h = std::max(
            euler_h, norm(hess_cartan(x) * x - 2.0 * g));
        eico = std::max(eico, std::abs(eiconal_ratio(x) - 9.0) / 9.0);
    }
    double trace_dev = 0.0;
    for (const double delta : {0.0, 0.25, 0.5, 0.9}) {
        for (std::uint64_t k = 0; k < n; ++k) {
            const Vec5 x = nth_annulus_sample(2, k, r_min);
            const double lhs = trace(hess_w(x, delta));
            const double rhs = (1.0 + delta) * (delta - 8.0) *
                               w_value(x, delta) / norm_sq(x);
            trace_dev = std::max(trace_dev, std::abs(lhs - rhs) /
                                                std::max(1.0, std::abs(rhs)));
        }
    }
    report(harm < 1e-12 && euler_g <= 1e-10 && euler_h <= 1e-10 &&
               eico <= 1e-10 && trace_dev <= 1e-9,
           "algebraic identity suite",
           "|trace D2P| max %.3g (< 1e-12); Euler identity residuals %.3g / "
           "%.3g (<= 1e-10); |DP|^2 = 9 |x|^4 with constant 9, rel dev %.3g "
           "(<= 1e-10); trace identity rel dev %.3g over exponents "
           "{0, 0.25, 0.5, 0.9} (<= 1e-9)",
           harm, euler_g, euler_h, eico, trace_dev);
}

// 9. Arbitration: the retained closed form reproduces the measured spectrum
//    while the competing general-exponent form disagrees by order one at
//    the section endpoint.
void criterion_arbitration() {
    double auth_dev = 0.0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const Vec5 x = nth_sphere_sample(4, k);
        auto analytic = mu_spectrum_half(recover_p(x));
        std::sort(analytic.begin(), analytic.end(),
                  [](double a, double b) { return a > b; });
        auth_dev = std::max(
            auth_dev, max_abs_dev(analytic, jacobi_spectrum(hess_w(x, 0.5))));
    }
    const Vec5 e1 = {1, 0, 0, 0, 0};
    auto variant = mu_spectrum_variant(1.0, 0.5);
    std::sort(variant.begin(), variant.end(),
              [](double a, double b) { return a > b; });
    const double var_dev =
        max_abs_dev(variant, jacobi_spectrum(hess_w(e1, 0.5)));
    report(auth_dev < 1e-7 && var_dev > 1.0, "closed-form arbitration",
           "retained form deviates %.3g (< 1e-7) over 1000 points; "
           "competing form deviates %.4f (> 1) at the section endpoint",
           auth_dev, var_dev);
}

// 10. Eigenvalue stability under symmetric perturbation on 1e4 random pairs:
//     slack never below -1e-10.
void criterion_weyl() {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 10000; ++k)
        worst = std::max(worst, weyl_stat(1, k));
    report(worst <= 1e-10, "perturbation stability",
           "max |lambda_i(A+B) - lambda_i(A)| - ||B|| = %.3g over 1e4 "
           "random symmetric pairs (slack bound -1e-10)",
           worst);
}

// 11. Two whole-suite runs with the same configuration but different worker
//     counts produce byte-identical reports.
void criterion_reproducibility() {
    RunConfig cfg;
    cfg.samples = 2000;
    cfg.seed = 17;
    cfg.threads = 1;
    const std::string first = emit_report_json(run(cfg), cfg);
    cfg.threads = 4;
    const std::string second = emit_report_json(run(cfg), cfg);
    report(!first.empty() && first == second, "bitwise reproducibility",
           "suite reports of %zu bytes are %s across 1 vs 4 worker threads",
           first.size(), first == second ? "identical" : "DIFFERENT");
}

}  // namespace

int main() {
    criterion_spectrum_autodiff();
    criterion_delta0_endpoint();
    criterion_crossing_location();
    criterion_derivative_bound();
    criterion_pairwise_bounds();
    criterion_difference_ratio();
    criterion_calibrated_ratio();
    criterion_identities();
    criterion_arbitration();
    criterion_weyl();
    criterion_reproducibility();
    std::printf("%d of %d criteria passed\n", g_index - g_failures, g_index);
    if (g_failures > 0)
        std::printf("note: the scaled-Hessian clause of criterion 05 is a "
                    "documented property failure of the candidate itself, "
                    "not of the implementation; see the check notes and "
                    "README\n");
    return g_failures;
}
