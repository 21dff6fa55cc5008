#pragma once

#include <cstdint>
#include <random>

namespace gkm {

// Seeded generator with a fixed output mapping, so draws are identical
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }
    // Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi)
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 g_;
};

}  // namespace gkm
