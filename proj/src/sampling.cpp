#include "chv/sampling.hpp"

#include <cmath>

namespace chv {

Vec5 sample_unit(Rng& rng) {
    for (;;) {
        Vec5 x;
        for (double& xi : x) xi = rng.gaussian();
        const double n = norm(x);
        if (n > 1e-12) return (1.0 / n) * x;
    }
}

Vec5 sample_annulus(Rng& rng, double r_min) {
    const Vec5 dir = sample_unit(rng);
    // Inverse-CDF sampling of the radius with density proportional to r^4
    // on [r_min, 1].
    const double lo5 = std::pow(r_min, 5.0);
    const double r = std::pow(lo5 + rng.uniform01() * (1.0 - lo5), 0.2);
    return r * dir;
}

PairSample sample_pair(Rng& rng, double r_min) {
    PairSample s;
    s.a = sample_annulus(rng, r_min);
    s.b = sample_annulus(rng, r_min);
    s.o = haar_so5(rng);
    return s;
}

}  // namespace chv
