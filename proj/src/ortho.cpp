#include "chv/ortho.hpp"

#include <cmath>
#include <cstddef>

namespace chv {

double det5(const Mat5& m) {
    // Gaussian elimination with partial pivoting on a working copy.
    Mat5 a = m;
    double det = 1.0;
    for (std::size_t col = 0; col < 5; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < 5; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < 5; ++j)
                std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < 5; ++r) {
            const double f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < 5; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

OrthoMat5 haar_so5(Rng& rng) {
    Mat5 g;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) g(i, j) = rng.gaussian();

    // Modified Gram-Schmidt on columns. The R diagonal (residual norms) is
    // positive by construction, which is the convention that makes Q Haar
    // on O(5) when G is Gaussian.
    OrthoMat5 q = g;
    for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            double proj = 0.0;
            for (std::size_t r = 0; r < 5; ++r) proj += q(r, k) * q(r, j);
            for (std::size_t r = 0; r < 5; ++r) q(r, j) -= proj * q(r, k);
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < 5; ++r) nrm += q(r, j) * q(r, j);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) {
            // Degenerate draw (probability ~0): retry with fresh Gaussians.
            return haar_so5(rng);
        }
        for (std::size_t r = 0; r < 5; ++r) q(r, j) /= nrm;
    }

    if (det5(q) < 0.0)
        for (std::size_t r = 0; r < 5; ++r) q(r, 4) = -q(r, 4);
    return q;
}

OrthoMat5 skew_exp(const SkewParam& s) {
    Mat5 skew;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j, ++k) {
            skew(i, j) = s[k];
            skew(j, i) = -s[k];
        }

    // Scale down so the Taylor series of exp converges fast, then square
    // back up.
    const double nrm = frobenius_norm(skew);
    int squarings = 0;
    double factor = 1.0;
    while (nrm * factor > 0.5) {
        factor *= 0.5;
        ++squarings;
    }
    Mat5 t = factor * skew;

    Mat5 result = Mat5::identity();
    Mat5 term = Mat5::identity();
    for (int n = 1; n <= 24; ++n) {
        term = (1.0 / n) * (term * t);
        result = result + term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace chv
