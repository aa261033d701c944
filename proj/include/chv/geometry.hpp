#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace chv {

using Vec5 = std::array<double, 5>;

// Dense 5x5 matrix in row-major order. Symmetric and orthogonal matrices
// use the same storage; the aliases below mark intent at API boundaries.
struct Mat5 {
    std::array<double, 25> a{};

    double& operator()(std::size_t i, std::size_t j) { return a[5 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[5 * i + j]; }

    static Mat5 identity() {
        Mat5 m;
        for (std::size_t i = 0; i < 5; ++i) m(i, i) = 1.0;
        return m;
    }
};

using SymMat5 = Mat5;
using OrthoMat5 = Mat5;

inline Vec5 operator+(const Vec5& x, const Vec5& y) {
    Vec5 r;
    for (std::size_t i = 0; i < 5; ++i) r[i] = x[i] + y[i];
    return r;
}

inline Vec5 operator-(const Vec5& x, const Vec5& y) {
    Vec5 r;
    for (std::size_t i = 0; i < 5; ++i) r[i] = x[i] - y[i];
    return r;
}

inline Vec5 operator*(double s, const Vec5& x) {
    Vec5 r;
    for (std::size_t i = 0; i < 5; ++i) r[i] = s * x[i];
    return r;
}

inline double dot(const Vec5& x, const Vec5& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < 5; ++i) s += x[i] * y[i];
    return s;
}

inline double norm_sq(const Vec5& x) { return dot(x, x); }
inline double norm(const Vec5& x) { return std::sqrt(norm_sq(x)); }

inline Mat5 operator+(const Mat5& m, const Mat5& n) {
    Mat5 r;
    for (std::size_t k = 0; k < 25; ++k) r.a[k] = m.a[k] + n.a[k];
    return r;
}

inline Mat5 operator-(const Mat5& m, const Mat5& n) {
    Mat5 r;
    for (std::size_t k = 0; k < 25; ++k) r.a[k] = m.a[k] - n.a[k];
    return r;
}

inline Mat5 operator*(double s, const Mat5& m) {
    Mat5 r;
    for (std::size_t k = 0; k < 25; ++k) r.a[k] = s * m.a[k];
    return r;
}

inline Mat5 operator*(const Mat5& m, const Mat5& n) {
    Mat5 r;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k) {
            const double mik = m(i, k);
            for (std::size_t j = 0; j < 5; ++j) r(i, j) += mik * n(k, j);
        }
    return r;
}

inline Vec5 operator*(const Mat5& m, const Vec5& x) {
    Vec5 r{};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r[i] += m(i, j) * x[j];
    return r;
}

inline Mat5 transpose(const Mat5& m) {
    Mat5 r;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r(i, j) = m(j, i);
    return r;
}

inline Mat5 outer(const Vec5& x, const Vec5& y) {
    Mat5 r;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r(i, j) = x[i] * y[j];
    return r;
}

inline double frobenius_norm(const Mat5& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

inline double trace(const Mat5& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < 5; ++i) s += m(i, i);
    return s;
}

// O^T * M * O, the pullback of M under the frame O.
inline Mat5 conjugate(const OrthoMat5& o, const Mat5& m) {
    return transpose(o) * (m * o);
}

inline double max_abs_entry(const Mat5& m) {
    double s = 0.0;
    for (double v : m.a) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace chv
