#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hodgelink::rng {

// Draws below avoid std::uniform_*_distribution and std::shuffle, whose
// outputs are implementation-defined; seeded results must be identical
// across standard libraries.

inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n), n >= 1.
inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= bound);
    return static_cast<std::size_t>(x % n);
}

inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {
    return lo + static_cast<int>(uniform_index(gen, static_cast<std::size_t>(hi - lo + 1)));
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& gen) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_index(gen, i);
        std::swap(v[i - 1], v[j]);
    }
}

/// Index into a cumulative-weight table: smallest i with u < cdf[i].
/// Falls back to the last entry when u exceeds cdf.back() by rounding.
inline std::size_t sample_cdf(const std::vector<double>& cdf, double u) {
    std::size_t lo = 0, hi = cdf.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (u < cdf[mid])
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

} // namespace hodgelink::rng
