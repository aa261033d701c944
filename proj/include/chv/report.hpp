#pragma once

#include <cstdint>
#include <string>

#include "chv/geometry.hpp"

namespace chv {

// Worst sample found by a check: a single point, a pair of points, or
// nothing (grid checks report the worst parameter as a point on the orbit
// section (p, 0, sqrt(1-p^2), 0, 0)).
struct Witness {
    enum Kind { kNone = 0, kPoint = 1, kPair = 2 };
    Kind kind = kNone;
    Vec5 a{};
    Vec5 b{};

    static Witness none() { return {}; }
    static Witness point(const Vec5& a) { return {kPoint, a, {}}; }
    static Witness pair(const Vec5& a, const Vec5& b) { return {kPair, a, b}; }
};

struct CheckReport {
    std::string name;
    bool pass = false;
    std::uint64_t samples = 0;
    double worst = 0.0;
    double bound = 0.0;
    double tolerance = 0.0;
    Witness witness;
    std::string notes;
};

}  // namespace chv
