#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace finsent {

// All randomness in the library flows from one master seed. Each use derives
// its own stream with a label so runs are reproducible and independent of
// evaluation order. mt19937_64 plus the hand-rolled reductions below keep the
// output stable across standard library versions.

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, std::string_view label) {
    return splitmix64(master ^ fnv1a64(label));
}

// Unbiased draw in [0, n) by rejection sampling.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline double uniform_unit(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates with our own index draws, so shuffles are engine-defined only.
template <typename T>
void shuffle_values(std::vector<T>& values, std::mt19937_64& rng) {
    for (size_t i = values.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(uniform_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace finsent
