#include "chv/cubic.hpp"

#include <cmath>
#include <string>

#include "chv/dual.hpp"
#include "chv/errors.hpp"

namespace chv {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void require_outside_floor(const Vec5& x, double r_min, const char* who) {
    if (norm(x) < r_min)
        throw ZeroPoint(std::string(who) + ": |x| below the evaluation floor");
}

}  // namespace

double cartan_cubic(const Vec5& x) {
    const double x1 = x[0], x2 = x[1], z1 = x[2], z2 = x[3], z3 = x[4];
    return x1 * x1 * x1 +
           1.5 * x1 * (z1 * z1 + z2 * z2 - 2.0 * z3 * z3 - 2.0 * x2 * x2) +
           1.5 * kSqrt3 * (x2 * z1 * z1 - x2 * z2 * z2 + 2.0 * z1 * z2 * z3);
}

Vec5 grad_cartan(const Vec5& x) {
    const double x1 = x[0], x2 = x[1], z1 = x[2], z2 = x[3], z3 = x[4];
    return {
        3.0 * x1 * x1 +
            1.5 * (z1 * z1 + z2 * z2 - 2.0 * z3 * z3 - 2.0 * x2 * x2),
        -6.0 * x1 * x2 + 1.5 * kSqrt3 * (z1 * z1 - z2 * z2),
        3.0 * x1 * z1 + 3.0 * kSqrt3 * (x2 * z1 + z2 * z3),
        3.0 * x1 * z2 + 3.0 * kSqrt3 * (z1 * z3 - x2 * z2),
        -6.0 * x1 * z3 + 3.0 * kSqrt3 * z1 * z2,
    };
}

SymMat5 hess_cartan(const Vec5& x) {
    const double x1 = x[0], x2 = x[1], z1 = x[2], z2 = x[3], z3 = x[4];
    SymMat5 m;
    m(0, 0) = 6.0 * x1;
    m(0, 1) = m(1, 0) = -6.0 * x2;
    m(0, 2) = m(2, 0) = 3.0 * z1;
    m(0, 3) = m(3, 0) = 3.0 * z2;
    m(0, 4) = m(4, 0) = -6.0 * z3;
    m(1, 1) = -6.0 * x1;
    m(1, 2) = m(2, 1) = 3.0 * kSqrt3 * z1;
    m(1, 3) = m(3, 1) = -3.0 * kSqrt3 * z2;
    m(1, 4) = m(4, 1) = 0.0;
    m(2, 2) = 3.0 * x1 + 3.0 * kSqrt3 * x2;
    m(2, 3) = m(3, 2) = 3.0 * kSqrt3 * z3;
    m(2, 4) = m(4, 2) = 3.0 * kSqrt3 * z2;
    m(3, 3) = 3.0 * x1 - 3.0 * kSqrt3 * x2;
    m(3, 4) = m(4, 3) = 3.0 * kSqrt3 * z1;
    m(4, 4) = -6.0 * x1;
    return m;
}

double w_value(const Vec5& x, double delta, double r_min) {
    require_outside_floor(x, r_min, "w_value");
    const double r = norm(x);
    return cartan_cubic(x) * std::pow(r, -1.0 - delta);
}

double u_value(const Vec5& x, double delta, double c, double r_min) {
    const double u = c + w_value(x, delta, r_min);
    if (u <= 0.0)
        throw NonPositiveU("u_value: c + w is not positive at this point");
    return u;
}

Vec5 grad_w(const Vec5& x, double delta, double r_min) {
    require_outside_floor(x, r_min, "grad_w");
    const double r = norm(x);
    const double rm1 = std::pow(r, -1.0 - delta);
    const double rm3 = std::pow(r, -3.0 - delta);
    const double p = cartan_cubic(x);
    const Vec5 gp = grad_cartan(x);
    return rm1 * gp - ((1.0 + delta) * p * rm3) * x;
}

SymMat5 hess_w(const Vec5& x, double delta, double r_min) {
    require_outside_floor(x, r_min, "hess_w");
    const double r = norm(x);
    const double rm1 = std::pow(r, -1.0 - delta);
    const double rm3 = std::pow(r, -3.0 - delta);
    const double rm5 = std::pow(r, -5.0 - delta);
    const double p = cartan_cubic(x);
    const Vec5 gp = grad_cartan(x);

    SymMat5 m = rm1 * hess_cartan(x);
    const Mat5 cross = outer(x, gp) + outer(gp, x);
    m = m - ((1.0 + delta) * rm3) * cross;
    m = m - ((1.0 + delta) * p * rm3) * Mat5::identity();
    m = m + ((1.0 + delta) * (3.0 + delta) * p * rm5) * outer(x, x);
    return m;
}

SymMat5 conformal_hessian(const Vec5& x, double delta, double c,
                          double r_min) {
    const double u = u_value(x, delta, c, r_min);
    const Vec5 g = grad_w(x, delta, r_min);
    return u * hess_w(x, delta, r_min) -
           (0.5 * norm_sq(g)) * Mat5::identity();
}

WDerivatives w_autodiff(const Vec5& x, double delta, double r_min) {
    require_outside_floor(x, r_min, "w_autodiff");
    Dual5 c[5];
    for (std::size_t i = 0; i < 5; ++i) c[i] = Dual5::variable(x[i], i);
    const Dual5 &x1 = c[0], &x2 = c[1], &z1 = c[2], &z2 = c[3], &z3 = c[4];

    const Dual5 p =
        x1 * x1 * x1 +
        1.5 * (x1 * (z1 * z1 + z2 * z2 - 2.0 * (z3 * z3) - 2.0 * (x2 * x2))) +
        (1.5 * kSqrt3) *
            (x2 * (z1 * z1) - x2 * (z2 * z2) + 2.0 * (z1 * (z2 * z3)));
    const Dual5 r2 = x1 * x1 + x2 * x2 + z1 * z1 + z2 * z2 + z3 * z3;
    const Dual5 w = p * pow(r2, -0.5 * (1.0 + delta));

    return {w.v, w.gradient(), w.hessian()};
}

}  // namespace chv
