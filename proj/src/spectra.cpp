#include "chv/spectra.hpp"

#include <cmath>

#include "chv/cubic.hpp"
#include "chv/errors.hpp"

namespace chv {

std::array<double, 5> mu_spectrum_half(double p) {
    const double p2 = p * p;
    const double root = std::sqrt(12.0 - 3.0 * p2);
    const double disc = std::sqrt(
        105.0 * p2 * p2 * p2 - 630.0 * p2 * p2 + 945.0 * p2 + 64.0);
    return {
        0.75 * p * (p2 + 1.0),
        0.25 * (3.0 * p * (p2 - 5.0) + 6.0 * root),
        0.25 * (3.0 * p * (p2 - 5.0) - 6.0 * root),
        (27.0 * p * (p2 - 3.0) + 3.0 * disc) / 16.0,
        (27.0 * p * (p2 - 3.0) - 3.0 * disc) / 16.0,
    };
}

std::array<double, 5> mu_derivatives_half(double p) {
    const double p2 = p * p;
    const double root = std::sqrt(12.0 - 3.0 * p2);
    const double disc = std::sqrt(
        105.0 * p2 * p2 * p2 - 630.0 * p2 * p2 + 945.0 * p2 + 64.0);
    const double poly = -0.75 * (5.0 - 3.0 * p2);
    const double radial = 4.5 * p / root;
    const double shared = 35.0 * p * (3.0 - p2) / (3.0 * disc);
    return {
        0.75 * (3.0 * p2 + 1.0),
        poly - radial,
        poly + radial,
        (81.0 * (1.0 - p2) / 16.0) * (shared - 1.0),
        -(81.0 * (1.0 - p2) / 16.0) * (shared + 1.0),
    };
}

std::array<double, 5> mu_spectrum_variant(double p, double delta) {
    const double p2 = p * p;
    const double root = std::sqrt(12.0 - 3.0 * p2);
    const double d = delta;
    const double disc = std::sqrt(
        (6.0 - d) * (4.0 - d) * (2.0 - d) * d * (p2 - 3.0) * (p2 - 3.0) * p2 +
        144.0 * (d - 2.0) * (d - 2.0));
    return {
        0.5 * p * (p2 * d + 6.0 - 3.0 * d),
        0.5 * (p * (p2 * d - 3.0 - 3.0 * d) + 3.0 * root),
        0.5 * (p * (p2 * d - 3.0 - 3.0 * d) - 3.0 * root),
        -0.25 * (p * d * (6.0 - d) * (3.0 - p2) + disc),
        -0.25 * (p * d * (6.0 - d) * (3.0 - p2) - disc),
    };
}

double p0_threshold(double delta) {
    return std::pow(3.0, 0.25) * std::sqrt(1.0 - delta) /
           std::pow(3.0 + 2.0 * delta - delta * delta, 0.25);
}

std::array<double, 5> ordered_spectrum_half(double p) {
    const auto mu = mu_spectrum_half(p);
    const double p0 = p0_threshold(0.5);
    const double l1 = mu[1];
    const double l5 = mu[2];
    const double l2 = p <= p0 ? mu[3] : mu[0];
    double l3;
    if (p <= -p0)
        l3 = mu[4];
    else if (p <= p0)
        l3 = mu[0];
    else
        l3 = mu[3];
    const double l4 = p <= -p0 ? mu[0] : mu[4];
    return {l1, l2, l3, l4, l5};
}

double recover_p(const Vec5& x) {
    const double r = norm(x);
    const double v = cartan_cubic(x) / (r * r * r);
    if (!(std::abs(v) <= 1.0 + 1e-12))
        throw RangeViolation(
            "recover_p: normalized cubic outside [-1, 1] (is x nonzero?)");
    const double target = std::min(1.0, std::max(-1.0, v));

    // g(p) = (3p - p^3)/2 - target is increasing on [-1, 1] with a sign
    // change across the bracket. Newton from the center, falling back to
    // bisection whenever the step leaves the bracket (it does near the
    // endpoints, where g' -> 0).
    double lo = -1.0, hi = 1.0;
    double p = target;  // the identity map is a good start near fixed points
    for (int it = 0; it < 80; ++it) {
        const double g = 0.5 * (3.0 * p - p * p * p) - target;
        const double dg = 1.5 * (1.0 - p * p);
        if (g > 0.0)
            hi = p;
        else
            lo = p;
        double next = dg > 0.0 ? p - g / dg : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - p) <= 1e-14) return next;
        p = next;
    }
    if (hi - lo <= 1e-14) return 0.5 * (lo + hi);
    throw NonConvergence("recover_p: no convergence in 80 iterations");
}

}  // namespace chv
