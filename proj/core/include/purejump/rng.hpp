#pragma once

#include <cmath>
#include <cstdint>

namespace purejump {

// Deterministic RNG used everywhere. Hand-rolled (xoshiro256++ over a
// splitmix64-expanded seed) because the standard library's distributions are
// implementation-defined and the Monte Carlo tables must be bit-identical
// across platforms and worker counts.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Child stream for replication `rep` of grid cell `cell` under a master seed.
// Fixed mixing chain so parallel and serial execution draw identical streams.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t rep) {
    std::uint64_t s = master ^ (0xa0761d6478bd642fULL * (cell + 1));
    std::uint64_t a = splitmix64(s);
    s = a ^ (0xe7037ed1a0b428dbULL * (rep + 1));
    return splitmix64(s);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
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

    // U[0,1) on a 53-bit grid.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Strictly interior U(0,1); avoids log(0) and the stable transform's endpoints.
    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    // Box-Muller with the companion draw cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double exponential() { return -std::log(uniform_pos()); }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace purejump
