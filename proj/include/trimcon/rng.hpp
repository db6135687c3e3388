#pragma once

#include <cstdint>
#include <initializer_list>

namespace trimcon {

// 64-bit finalizer (splitmix64). Good avalanche, cheap, and stateless — every
// random quantity in the toolkit is a pure function of its key words, so
// draws can be evaluated in any order and are stable across platforms.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) keyed by the given words.
inline double keyed_unit(std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = 0x6a09e667f3bcc909ull;  // arbitrary non-zero start
    for (std::uint64_t k : keys) h = mix64(h ^ k);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi) keyed by the given words.
inline double keyed_uniform(double lo, double hi, std::initializer_list<std::uint64_t> keys) {
    return lo + keyed_unit(keys) * (hi - lo);
}

// Key-space tags keeping unrelated random streams apart.
inline constexpr std::uint64_t kStreamInputs = 0x696e707574ull;
inline constexpr std::uint64_t kStreamBroadcast = 0x62636173ull;
inline constexpr std::uint64_t kStreamPerEdge = 0x65646765ull;

}  // namespace trimcon
