#pragma once

#include <cstdint>

namespace stochsched {

// splitmix64 finalizer; used both as a mixer and as a tiny counter-based
// generator so that streams are reproducible independent of thread count
// and platform.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL));
}

// Counter-based stream: next() = mix64(state, counter++). Splittable via
// hash_combine, so per-trial substreams never overlap regardless of the
// order threads consume them.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {}

    std::uint64_t next_u64() { return mix64(state_ + counter_++); }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
    std::uint64_t counter_ = 0;
};

}  // namespace stochsched
