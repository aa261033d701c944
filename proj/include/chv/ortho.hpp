#pragma once

#include <array>

#include "chv/geometry.hpp"
#include "chv/rng.hpp"

namespace chv {

// Upper-triangle entries (i<j, row-major) of a 5x5 skew-symmetric matrix:
// (0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
using SkewParam = std::array<double, 10>;

// Haar-distributed rotation: QR of a Gaussian matrix with the R-diagonal
// forced positive (giving Haar measure on O(5)), then the determinant is
// fixed to +1 by flipping the last column when needed.
OrthoMat5 haar_so5(Rng& rng);

// exp(S) for the skew-symmetric matrix built from s, via scaling and
// squaring with a Taylor core. Always lands in SO(5).
OrthoMat5 skew_exp(const SkewParam& s);

double det5(const Mat5& m);

}  // namespace chv
