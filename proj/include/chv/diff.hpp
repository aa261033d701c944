#pragma once

#include "chv/geometry.hpp"
#include "chv/sampling.hpp"

namespace chv {

// All comparison matrices for one pair (a, b) with aligning rotation O.
//
//   m1 = D2w(a) - O^T D2w(b) O
//   m2 = w(a) D2w(a) - O^T (w(b) D2w(b)) O
//   a_diff = A^u(a) - O^T A^u(b) O,  A^u = u D2u - (1/2)|Du|^2 I
//
// and the comparison metric k = |s - t| + |p - q| built from the orbit
// parameters p, q of a, b and their scale parameters s = |a|^(2-2*delta),
// t = |b|^(2-2*delta) (for delta = 1/2 these are just the radii). The
// identity a_diff = c*m1 + m2 - (1/2)*grad_diff*I holds exactly, with
// grad_diff = |Dw(a)|^2 - |Dw(b)|^2.
struct DiffMatrices {
    SymMat5 m1;
    SymMat5 m2;
    SymMat5 a_diff;
    double grad_diff = 0.0;
    double k = 0.0;
    double s = 0.0, t = 0.0, p = 0.0, q = 0.0;
    double w_a = 0.0, w_b = 0.0;
};

DiffMatrices build_diff(const PairSample& sample, double delta, double c,
                        double r_min);

}  // namespace chv
