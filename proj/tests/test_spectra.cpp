#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "chv/cubic.hpp"
#include "chv/eigen.hpp"
#include "chv/errors.hpp"
#include "chv/geometry.hpp"
#include "chv/rng.hpp"
#include "chv/sampling.hpp"
#include "chv/spectra.hpp"

using namespace chv;

namespace {

Vec5 section_point(double p) {
    return {p, 0.0, std::sqrt(std::max(0.0, 1.0 - p * p)), 0.0, 0.0};
}

std::array<double, 5> sorted_desc(std::array<double, 5> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

// Trigonometric closed form for the orbit parameter. The depressed cubic
// (3p - p^3)/2 = v has the unique root in [-1, 1] at
// p = 2 cos((acos(-v) + 4 pi) / 3), which serves as an independent oracle
// for the Newton-based recovery.
double recover_p_trig(double v) {
    const double clamped = std::min(1.0, std::max(-1.0, v));
    return 2.0 * std::cos((std::acos(-clamped) + 4.0 * M_PI) / 3.0);
}

}  // namespace

TEST_CASE("branch values at the reference parameters") {
    const auto at_one = mu_spectrum_half(1.0);
    const std::array<double, 5> expect_one = {1.5, 1.5, -7.5, 0.75, -7.5};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(at_one[i] == doctest::Approx(expect_one[i]).epsilon(1e-14));

    const auto at_zero = mu_spectrum_half(0.0);
    const double s27 = 3.0 * std::sqrt(3.0);
    const std::array<double, 5> expect_zero = {0.0, s27, -s27, 1.5, -1.5};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(at_zero[i] == doctest::Approx(expect_zero[i]).epsilon(1e-14));
}

TEST_CASE("branch sum equals the trace closed form") {
    for (double p = -1.0; p <= 1.0 + 1e-12; p += 0.01) {
        const auto mu = mu_spectrum_half(p);
        double sum = 0.0;
        for (double m : mu) sum += m;
        CHECK(sum ==
              doctest::Approx(45.0 * p * (p * p - 3.0) / 8.0).epsilon(1e-12));
    }
}

TEST_CASE("branches reproduce the measured spectrum on the section") {
    for (double p = -1.0; p <= 1.0 + 1e-12; p += 0.01) {
        const auto analytic = sorted_desc(mu_spectrum_half(p));
        const auto measured =
            jacobi_spectrum(hess_w(section_point(p), 0.5));
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(analytic[i] ==
                  doctest::Approx(measured[i]).epsilon(1e-10));
    }
}

TEST_CASE("branches reproduce the measured spectrum at random points") {
    Rng rng(30);
    for (int i = 0; i < 300; ++i) {
        const Vec5 x = sample_unit(rng);
        const auto analytic =
            sorted_desc(mu_spectrum_half(recover_p(x)));
        const auto measured = jacobi_spectrum(hess_w(x, 0.5));
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(std::abs(analytic[j] - measured[j]) <= 1e-8);
    }
}

TEST_CASE("variant closed form disagrees at delta = 1/2") {
    // Spot values of the variant at p = 1, delta = 1/2.
    const auto v = mu_spectrum_variant(1.0, 0.5);
    CHECK(v[0] == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(v[2] == doctest::Approx(-6.5).epsilon(1e-14));

    double sum = 0.0;
    for (double m : v) sum += m;
    CHECK(sum == doctest::Approx(-4.25).epsilon(1e-12));
    // The authoritative trace at p = 1 is -11.25, so the variant misses the
    // trace law by a wide margin.
    CHECK(std::abs(sum - 45.0 * 1.0 * (1.0 - 3.0) / 8.0) > 1.0);

    const auto analytic = sorted_desc(v);
    const auto measured = jacobi_spectrum(hess_w(section_point(1.0), 0.5));
    double dev = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        dev = std::max(dev, std::abs(analytic[i] - measured[i]));
    CHECK(dev > 1.0);
}

TEST_CASE("derivatives match finite differences of the branches") {
    const double h = 1e-6;
    for (double p = -1.0; p <= 1.0 + 1e-12; p += 0.01) {
        const auto d = mu_derivatives_half(p);
        const auto up = mu_spectrum_half(p + h);
        const auto dn = mu_spectrum_half(p - h);
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(d[i] - (up[i] - dn[i]) / (2.0 * h)) <= 1e-6);
    }
}

TEST_CASE("derivative reference values at p = 0") {
    const auto d = mu_derivatives_half(0.0);
    CHECK(d[0] == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(d[1] == doctest::Approx(-3.75).epsilon(1e-14));
    CHECK(d[2] == doctest::Approx(-3.75).epsilon(1e-14));
    CHECK(d[3] == doctest::Approx(-81.0 / 16.0).epsilon(1e-14));
    CHECK(d[4] == doctest::Approx(-81.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("derivative magnitudes stay inside the certified window") {
    double max_abs = 0.0;
    for (double p = -1.0; p <= 1.0 + 1e-12; p += 1e-4) {
        const auto d = mu_derivatives_half(p);
        for (double di : d) max_abs = std::max(max_abs, std::abs(di));
    }
    CHECK(max_abs < 10.0);
    CHECK(max_abs > 5.06);
}

TEST_CASE("ordered spectrum table matches a direct sort") {
    for (double p = -1.0; p <= 1.0 + 1e-12; p += 0.001) {
        const auto table = ordered_spectrum_half(p);
        const auto sorted = sorted_desc(mu_spectrum_half(p));
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(table[i] - sorted[i]) <= 1e-10);
        for (std::size_t i = 0; i + 1 < 5; ++i)
            CHECK(table[i] >= table[i + 1] - 1e-12);
    }
}

TEST_CASE("spectrum oddness under p -> -p") {
    for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.001) {
        const auto pos = ordered_spectrum_half(p);
        const auto neg = ordered_spectrum_half(-p);
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(neg[i] + pos[4 - i]) <= 1e-10);
    }
}

TEST_CASE("crossing parameter") {
    const double p0 = p0_threshold(0.5);
    CHECK(p0 == doctest::Approx(std::pow(5.0, -0.25)).epsilon(1e-15));
    CHECK(p0 == doctest::Approx(0.6687403050).epsilon(1e-9));

    // The first and fourth branches cross exactly at p0 ...
    const auto mu = mu_spectrum_half(p0);
    CHECK(std::abs(mu[0] - mu[3]) <= 1e-12);
    // ... and at -p0 the first and fifth cross by oddness.
    const auto mn = mu_spectrum_half(-p0);
    CHECK(std::abs(mn[0] - mn[4]) <= 1e-12);

    CHECK(p0_threshold(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p0_threshold(0.999) < 0.05);
}

TEST_CASE("orbit parameter recovery round-trips the section") {
    for (double p = -1.0; p <= 1.0 + 1e-12; p += 0.01) {
        const double rec = recover_p(section_point(p));
        // Near the endpoints the cubic flattens quadratically, so compare
        // through the residual rather than the parameter itself.
        const double res = std::abs(0.5 * (3.0 * rec - rec * rec * rec) -
                                    0.5 * (3.0 * p - p * p * p));
        CHECK(res <= 1e-12);
        if (std::abs(p) < 0.99) CHECK(std::abs(rec - p) <= 1e-10);
    }
}

TEST_CASE("orbit parameter recovery agrees with the trigonometric oracle") {
    Rng rng(31);
    for (int i = 0; i < 2000; ++i) {
        const Vec5 x = sample_unit(rng);
        const double v = cartan_cubic(x);
        const double rec = recover_p(x);
        const double trig = recover_p_trig(v);
        CHECK(std::abs(0.5 * (3.0 * rec - rec * rec * rec) - v) <= 1e-12);
        if (std::abs(v) < 0.999) CHECK(std::abs(rec - trig) <= 1e-9);
    }
}

TEST_CASE("orbit parameter recovery scales out the radius") {
    Rng rng(32);
    for (int i = 0; i < 50; ++i) {
        const Vec5 x = sample_unit(rng);
        const double p1 = recover_p(x);
        const double p2 = recover_p(0.037 * x);
        CHECK(p1 == doctest::Approx(p2).epsilon(1e-12));
    }
}

TEST_CASE("orbit parameter recovery rejects undefined input") {
    CHECK_THROWS_AS(recover_p({0, 0, 0, 0, 0}), RangeViolation);
}
