#pragma once

#include <cmath>
#include <cstdint>

namespace chv {

// Counter-based pseudo-random generator built on Threefry2x64 with 20
// rounds. Streams are cheap: (seed, stream) pairs index statistically
// independent sequences, which makes parallel sampling reproducible
// regardless of how work is split across threads.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_{seed, stream} {}

    // Fresh generator on the same seed but a different stream. Counter and
    // cached Gaussian spare start from scratch.
    Rng substream(std::uint64_t index) const { return Rng(key_[0], index); }

    std::uint64_t next_u64() {
        if (lane_ == 0) {
            block(ctr_, key_, out_);
            if (++ctr_[0] == 0) ++ctr_[1];
        }
        const std::uint64_t v = out_[lane_];
        lane_ ^= 1;
        return v;
    }

    // Uniform on [0,1) with 53 random bits, so every value is an exact
    // multiple of 2^-53.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard normal via the Marsaglia polar method; the second deviate of
    // each accepted pair is cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // One Threefry2x64-20 block: encrypts the counter under the key.
    static void block(const std::uint64_t ctr[2], const std::uint64_t key[2],
                      std::uint64_t out[2]) {
        constexpr std::uint64_t kParity = 0x1BD11BDAA9FC1A22ULL;
        constexpr unsigned kRot[8] = {16, 42, 12, 31, 16, 32, 24, 21};
        const std::uint64_t ks[3] = {key[0], key[1], kParity ^ key[0] ^ key[1]};
        std::uint64_t x0 = ctr[0] + ks[0];
        std::uint64_t x1 = ctr[1] + ks[1];
        for (unsigned r = 0; r < 20; ++r) {
            x0 += x1;
            x1 = rotl(x1, kRot[r % 8]);
            x1 ^= x0;
            if ((r + 1) % 4 == 0) {
                const std::uint64_t s = (r + 1) / 4;
                x0 += ks[s % 3];
                x1 += ks[(s + 1) % 3] + s;
            }
        }
        out[0] = x0;
        out[1] = x1;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, unsigned n) {
        return (x << n) | (x >> (64 - n));
    }

    std::uint64_t key_[2];
    std::uint64_t ctr_[2] = {0, 0};
    std::uint64_t out_[2] = {0, 0};
    unsigned lane_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace chv
