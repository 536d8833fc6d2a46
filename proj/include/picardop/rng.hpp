#pragma once

#include <cmath>
#include <cstdint>

namespace picardop {

// Deterministic, platform-independent random stream (xoshiro256++ seeded via
// splitmix64). std::normal_distribution is not bit-stable across standard
// libraries, so uniform and Gaussian draws are constructed explicitly here;
// all artifact randomness flows through this type.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
        have_spare_ = false;
    }

    /// Independent substream for (seed, index) pairs, e.g. one per sample.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t x = seed;
        std::uint64_t a = splitmix64(x);
        x = index + 0x9e3779b97f4a7c15ULL;
        std::uint64_t b = splitmix64(x);
        return Rng(a ^ (b * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller (cached spare).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Rademacher sign.
    double sign() { return (next_u64() >> 63) ? 1.0 : -1.0; }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_;
};

} // namespace picardop
