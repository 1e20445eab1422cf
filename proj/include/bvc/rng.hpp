#pragma once

#include <random>

namespace bvc {

// Bounded draws built on the fully specified mt19937_64 stream. The standard
// library's distribution objects are implementation-defined, so using them
// would break byte-identical output across toolchains.

inline unsigned long long rng_below(std::mt19937_64& g, unsigned long long span) {
    unsigned long long rem = (~0ull % span + 1) % span; // 2^64 mod span
    for (;;) {
        unsigned long long r = g();
        if (rem == 0 || r < ~0ull - rem + 1)
            return r % span;
    }
}

inline long rng_range(std::mt19937_64& g, long lo, long hi) {
    return lo + static_cast<long>(rng_below(g, static_cast<unsigned long long>(hi - lo) + 1));
}

} // namespace bvc
