#pragma once

// Reproducible per-trajectory RNG streams: a splitmix64 hop over
// (base_seed, stream index) seeds an independent mt19937_64 per trajectory,
// so ensembles are order-independent and bit-reproducible.

#include <cstdint>
#include <random>

namespace jc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t base_seed, std::uint64_t index) {
    std::uint64_t s = base_seed;
    (void)splitmix64(s);
    s ^= 0xD1B54A32D192ED03ull * (index + 1);
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s) >> 32),
                      static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s) >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace jc
