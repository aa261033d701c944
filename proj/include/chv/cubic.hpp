#pragma once

#include "chv/geometry.hpp"

namespace chv {

inline constexpr double kDefaultDelta = 0.5;
inline constexpr double kDefaultC = 240000.0;
inline constexpr double kDefaultRmin = 1e-3;

// The Cartan isoparametric cubic on R^5 in coordinates
// x = (x1, x2, z1, z2, z3):
//   P(x) = x1^3 + (3/2) x1 (z1^2 + z2^2 - 2 z3^2 - 2 x2^2)
//        + (3 sqrt(3) / 2) (x2 z1^2 - x2 z2^2 + 2 z1 z2 z3).
// It is harmonic, homogeneous of degree 3, and satisfies
// |grad P(x)|^2 = 9 |x|^4, so |P| <= |x|^3 with equality on a great circle's
// orbit. Restricted to the unit sphere its range is exactly [-1, 1].
double cartan_cubic(const Vec5& x);
Vec5 grad_cartan(const Vec5& x);
SymMat5 hess_cartan(const Vec5& x);

// The singular-solution candidate w(x) = P(x) / |x|^(1+delta) and
// u(x) = c + w(x). All evaluations reject points with |x| < r_min since the
// fields blow up toward the origin.
double w_value(const Vec5& x, double delta, double r_min = kDefaultRmin);
double u_value(const Vec5& x, double delta, double c,
               double r_min = kDefaultRmin);
Vec5 grad_w(const Vec5& x, double delta, double r_min = kDefaultRmin);
SymMat5 hess_w(const Vec5& x, double delta, double r_min = kDefaultRmin);

// Conformal Hessian A^u = u D^2 u - (1/2) |Du|^2 I with u = c + w, so
// Du = Dw and D^2 u = D^2 w.
SymMat5 conformal_hessian(const Vec5& x, double delta, double c,
                          double r_min = kDefaultRmin);

// Value, gradient and Hessian of w computed independently by forward-mode
// automatic differentiation (no reuse of the closed forms above).
struct WDerivatives {
    double value;
    Vec5 grad;
    SymMat5 hess;
};
WDerivatives w_autodiff(const Vec5& x, double delta,
                        double r_min = kDefaultRmin);

}  // namespace chv
