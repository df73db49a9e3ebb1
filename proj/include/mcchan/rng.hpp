#pragma once

// Deterministic RNG for the particle engine: xoshiro256++ with splitmix64
// stream derivation, so trial i of seed s draws the same numbers regardless
// of scheduling or platform. Normal variates use a 256-layer ziggurat.

#include <cstdint>
#include <cstddef>

namespace mcchan {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Xoshiro256 {
  public:
    Xoshiro256() : Xoshiro256(0, 0) {}

    // Independent stream per (seed, stream_id).
    Xoshiro256(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t sm = seed;
        std::uint64_t mix = stream_id + 1;
        sm ^= splitmix64(mix);
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next() {
        std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

    double normal();

    // n independent standard normals into out.
    void fill_normal(double* out, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) out[i] = normal();
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace mcchan
