#include "chv/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "chv/errors.hpp"

namespace chv {

namespace {

double off_diagonal_norm(const Mat5& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenSys jacobi_eigensystem(const SymMat5& m) {
    Mat5 a = m;
    Mat5 v = Mat5::identity();
    const double scale = frobenius_norm(m);
    const double target = 1e-13 * scale;

    bool converged = scale == 0.0;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p < 5; ++p)
            for (std::size_t q = p + 1; q < 5; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < 5; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
                for (std::size_t r = 0; r < 5; ++r) {
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        converged = off_diagonal_norm(a) < target;
    }
    if (!converged)
        throw NonConvergence(
            "jacobi_eigensystem: 100 sweeps without convergence (NaN input?)");

    std::array<std::size_t, 5> order = {0, 1, 2, 3, 4};
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i) > a(j, j);
    });

    EigenSys sys;
    for (std::size_t i = 0; i < 5; ++i) {
        sys.values[i] = a(order[i], order[i]);
        for (std::size_t r = 0; r < 5; ++r) sys.vectors(r, i) = v(r, order[i]);
    }
    return sys;
}

std::array<double, 5> jacobi_spectrum(const SymMat5& m) {
    return jacobi_eigensystem(m).values;
}

double opnorm_sym(const SymMat5& m) {
    const auto ev = jacobi_spectrum(m);
    return std::max(std::abs(ev[0]), std::abs(ev[4]));
}

}  // namespace chv
