#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "chv/errors.hpp"
#include "chv/geometry.hpp"

namespace chv {

// Forward-mode scalar carrying value, gradient and Hessian with respect to
// all five coordinates at once. The Hessian is stored as the packed upper
// triangle in row-major order, so entry (i,j) with i <= j lives at
// kTriBase[i] + (j - i).
struct Dual5 {
    static constexpr std::array<std::size_t, 5> kTriBase = {0, 5, 9, 12, 14};

    double v = 0.0;
    std::array<double, 5> g{};
    std::array<double, 15> h{};

    Dual5() = default;
    explicit Dual5(double value) : v(value) {}

    static Dual5 variable(double value, std::size_t i) {
        Dual5 d(value);
        d.g[i] = 1.0;
        return d;
    }

    static constexpr std::size_t tri(std::size_t i, std::size_t j) {
        return i <= j ? kTriBase[i] + (j - i) : kTriBase[j] + (i - j);
    }

    SymMat5 hessian() const {
        SymMat5 m;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i; j < 5; ++j) m(i, j) = m(j, i) = h[tri(i, j)];
        return m;
    }

    Vec5 gradient() const { return {g[0], g[1], g[2], g[3], g[4]}; }
};

inline Dual5 operator+(const Dual5& a, const Dual5& b) {
    Dual5 r(a.v + b.v);
    for (std::size_t i = 0; i < 5; ++i) r.g[i] = a.g[i] + b.g[i];
    for (std::size_t k = 0; k < 15; ++k) r.h[k] = a.h[k] + b.h[k];
    return r;
}

inline Dual5 operator-(const Dual5& a, const Dual5& b) {
    Dual5 r(a.v - b.v);
    for (std::size_t i = 0; i < 5; ++i) r.g[i] = a.g[i] - b.g[i];
    for (std::size_t k = 0; k < 15; ++k) r.h[k] = a.h[k] - b.h[k];
    return r;
}

inline Dual5 operator-(const Dual5& a) {
    Dual5 r(-a.v);
    for (std::size_t i = 0; i < 5; ++i) r.g[i] = -a.g[i];
    for (std::size_t k = 0; k < 15; ++k) r.h[k] = -a.h[k];
    return r;
}

inline Dual5 operator*(const Dual5& a, const Dual5& b) {
    Dual5 r(a.v * b.v);
    for (std::size_t i = 0; i < 5; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j) {
            const std::size_t k = Dual5::tri(i, j);
            r.h[k] = a.h[k] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] +
                     a.v * b.h[k];
        }
    return r;
}

inline Dual5 operator+(const Dual5& a, double c) { return a + Dual5(c); }
inline Dual5 operator+(double c, const Dual5& a) { return Dual5(c) + a; }
inline Dual5 operator-(const Dual5& a, double c) { return a - Dual5(c); }
inline Dual5 operator-(double c, const Dual5& a) { return Dual5(c) - a; }

inline Dual5 operator*(double c, const Dual5& a) {
    Dual5 r(c * a.v);
    for (std::size_t i = 0; i < 5; ++i) r.g[i] = c * a.g[i];
    for (std::size_t k = 0; k < 15; ++k) r.h[k] = c * a.h[k];
    return r;
}
inline Dual5 operator*(const Dual5& a, double c) { return c * a; }

// Applies the univariate chain rule for f with derivatives f1, f2 at a.v.
inline Dual5 chain(const Dual5& a, double f0, double f1, double f2) {
    Dual5 r(f0);
    for (std::size_t i = 0; i < 5; ++i) r.g[i] = f1 * a.g[i];
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j) {
            const std::size_t k = Dual5::tri(i, j);
            r.h[k] = f1 * a.h[k] + f2 * a.g[i] * a.g[j];
        }
    return r;
}

inline Dual5 operator/(const Dual5& a, const Dual5& b) {
    if (b.v == 0.0) throw DomainError("Dual5: division by zero value");
    const double inv = 1.0 / b.v;
    return a * chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}
inline Dual5 operator/(const Dual5& a, double c) { return a * (1.0 / c); }
inline Dual5 operator/(double c, const Dual5& b) { return Dual5(c) / b; }

inline Dual5 sqrt(const Dual5& a) {
    if (a.v <= 0.0)
        throw DomainError("Dual5: sqrt requires a strictly positive value");
    const double s = std::sqrt(a.v);
    return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

// a raised to a real exponent; the base must stay strictly positive so the
// derivative terms are finite.
inline Dual5 pow(const Dual5& a, double k) {
    if (a.v <= 0.0)
        throw DomainError("Dual5: pow requires a strictly positive base");
    const double f0 = std::pow(a.v, k);
    const double f1 = k * f0 / a.v;
    const double f2 = k * (k - 1.0) * f0 / (a.v * a.v);
    return chain(a, f0, f1, f2);
}

}  // namespace chv
