#pragma once

#include "chv/geometry.hpp"

namespace chv {

// Central finite differences for scalar fields on R^5. Step sizes around
// 1e-5 balance truncation against cancellation for the fields checked here;
// callers should stay within [1e-7, 1e-3].

template <class F>
Vec5 fd_gradient(F&& f, const Vec5& x, double h) {
    Vec5 g{};
    for (std::size_t i = 0; i < 5; ++i) {
        Vec5 xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        g[i] = (f(xp) - f(xm)) / (2.0 * h);
    }
    return g;
}

template <class F>
SymMat5 fd_hessian(F&& f, const Vec5& x, double h) {
    SymMat5 m;
    const double fx = f(x);
    for (std::size_t i = 0; i < 5; ++i) {
        Vec5 xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        m(i, i) = (f(xp) - 2.0 * fx + f(xm)) / (h * h);
    }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            Vec5 xpp = x, xpm = x, xmp = x, xmm = x;
            xpp[i] += h;
            xpp[j] += h;
            xpm[i] += h;
            xpm[j] -= h;
            xmp[i] -= h;
            xmp[j] += h;
            xmm[i] -= h;
            xmm[j] -= h;
            m(i, j) = m(j, i) =
                (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
        }
    return m;
}

// Central difference for a scalar function of one variable.
template <class F>
double fd_derivative(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace chv
