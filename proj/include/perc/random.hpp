#pragma once

#include <cstdint>
#include <random>

namespace perc {

// SplitMix64 scrambler; decorrelates nearby seeds before they reach the twister.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Generator for (seed, stream). Stream 0 is the default; parallel workers take
// streams 1..W so a run is reproducible for a fixed (seed, worker count).
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * stream;
    return std::mt19937_64(splitmix64(s));
}

// Uniform double in [0, 1) with 53-bit resolution, identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n); n >= 1.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

}  // namespace perc
