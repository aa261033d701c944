#include "chv/diff.hpp"

#include <cmath>

#include "chv/cubic.hpp"
#include "chv/spectra.hpp"

namespace chv {

DiffMatrices build_diff(const PairSample& sample, double delta, double c,
                        double r_min) {
    DiffMatrices d;
    d.p = recover_p(sample.a);
    d.q = recover_p(sample.b);
    const double expo = 2.0 - 2.0 * delta;
    d.s = std::pow(norm(sample.a), expo);
    d.t = std::pow(norm(sample.b), expo);
    d.k = std::abs(d.s - d.t) + std::abs(d.p - d.q);

    d.w_a = w_value(sample.a, delta, r_min);
    d.w_b = w_value(sample.b, delta, r_min);
    const SymMat5 ha = hess_w(sample.a, delta, r_min);
    const SymMat5 hb = conjugate(sample.o, hess_w(sample.b, delta, r_min));
    d.m1 = ha - hb;
    d.m2 = d.w_a * ha - d.w_b * hb;

    const double ga = norm_sq(grad_w(sample.a, delta, r_min));
    const double gb = norm_sq(grad_w(sample.b, delta, r_min));
    d.grad_diff = ga - gb;

    const SymMat5 aa =
        (c + d.w_a) * ha - (0.5 * ga) * Mat5::identity();
    const SymMat5 ab =
        (c + d.w_b) * hess_w(sample.b, delta, r_min) -
        (0.5 * gb) * Mat5::identity();
    d.a_diff = aa - conjugate(sample.o, ab);
    return d;
}

}  // namespace chv
