#pragma once

#include <cmath>
#include <cstdint>

namespace ucc {

// SplitMix64 (Steele, Lea & Flood): a 64-bit mixing generator. Small state,
// passes BigCrush, and cheap enough to seed one stream per drop.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Stateless 64-bit finalizer used to derive decorrelated per-drop seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Independent substream for one drop: hashing the drop index through the
// finalizer puts consecutive drops at unrelated points of the state space
// (consecutive raw seeds would yield shifted copies of the same sequence).
inline SplitMix64 drop_stream(std::uint64_t seed, std::uint64_t drop_index) {
    return SplitMix64(mix64(seed ^ mix64(drop_index + 0x9E3779B97F4A7C15ULL)));
}

// Poisson sample by exponential spacings: counts unit-rate arrivals before
// the budget mu is spent. O(mu) draws, exact for all mu at our scales.
inline std::int64_t poisson(SplitMix64& gen, double mu) {
    std::int64_t n = 0;
    double acc = 0.0;
    while (true) {
        acc += -std::log1p(-gen.uniform());
        if (acc > mu) break;
        ++n;
    }
    return n;
}

}  // namespace ucc
