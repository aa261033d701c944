#pragma once

#include "chv/geometry.hpp"
#include "chv/ortho.hpp"
#include "chv/rng.hpp"

namespace chv {

// A comparison sample: two points of the unit ball (outside the r_min
// floor) plus a rotation used to align their frames.
struct PairSample {
    Vec5 a{};
    Vec5 b{};
    OrthoMat5 o;
};

// Uniform direction on the unit sphere.
Vec5 sample_unit(Rng& rng);

// Uniform point of the annulus r_min <= |x| <= 1 (radius density r^4).
Vec5 sample_annulus(Rng& rng, double r_min);

// Draws a, b, then o, in that fixed order.
PairSample sample_pair(Rng& rng, double r_min);

}  // namespace chv
