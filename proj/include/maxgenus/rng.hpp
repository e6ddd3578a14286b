#pragma once

#include <cstdint>
#include <random>

namespace maxgenus {

// All seeded behavior in the library funnels through these two helpers so
// that equal seeds give equal outputs on any platform. mt19937_64 output is
// fully specified by the standard; std::uniform_int_distribution is not,
// hence the hand-rolled rejection sampler.
using Rng = std::mt19937_64;

inline uint64_t uniform_below(Rng& rng, uint64_t n) {
    // rejection sampling keeps the draw unbiased
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

template <typename T>
void shuffle_inplace(std::vector<T>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

}  // namespace maxgenus
