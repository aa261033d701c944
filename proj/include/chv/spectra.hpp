#pragma once

#include <array>

#include "chv/geometry.hpp"

namespace chv {

// Every unit vector lies on the symmetry-group orbit of a point
// (p, 0, sqrt(1-p^2), 0, 0) with p in [-1, 1], and P restricted to the unit
// sphere takes the value (3p - p^3) / 2 there. All spectral data of the
// scaled Hessian on the sphere depends only on p.

// Eigenvalues mu_1..mu_5 (fixed analytic branch order, not sorted) of the
// Hessian of w at a unit-sphere point with orbit parameter p, for the
// homogeneity exponent delta = 1/2.
std::array<double, 5> mu_spectrum_half(double p);

// Analytic derivatives d(mu_i)/dp of the branches above.
std::array<double, 5> mu_derivatives_half(double p);

// A competing general-delta closed form for the same spectrum, kept for
// arbitration; at delta = 1/2 it disagrees with the measured spectrum (see
// the arbitration check).
std::array<double, 5> mu_spectrum_variant(double p, double delta);

// Crossing parameter p0: the branch ordering changes at |p| = p0(delta).
double p0_threshold(double delta);

// Eigenvalues sorted non-increasing, assembled from the branch table for
// delta = 1/2.
std::array<double, 5> ordered_spectrum_half(double p);

// Recovers the orbit parameter p in [-1, 1] of any nonzero point by solving
// (3p - p^3) / 2 = P(x/|x|) with a safeguarded Newton iteration (bisection
// fallback, absolute tolerance 1e-14, at most 80 iterations). Throws
// RangeViolation if the normalized cubic leaves [-1 - 1e-12, 1 + 1e-12] and
// NonConvergence if the iteration cap is hit.
double recover_p(const Vec5& x);

}  // namespace chv
