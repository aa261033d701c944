#pragma once

#include <array>

#include "chv/geometry.hpp"

namespace chv {

struct EigenSys {
    std::array<double, 5> values{};  // sorted non-increasing
    Mat5 vectors;                    // column i pairs with values[i]
};

// Full eigensystem of a symmetric matrix by cyclic Jacobi rotations.
// Converges quadratically for 5x5 inputs; throws NonConvergence if the
// off-diagonal mass has not dropped below 1e-13 * ||m||_F after 100 sweeps,
// which in practice only happens for NaN inputs.
EigenSys jacobi_eigensystem(const SymMat5& m);

// Eigenvalues only, sorted non-increasing.
std::array<double, 5> jacobi_spectrum(const SymMat5& m);

// Spectral norm of a symmetric matrix: max |eigenvalue|.
double opnorm_sym(const SymMat5& m);

}  // namespace chv
