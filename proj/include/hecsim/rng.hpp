#pragma once

// Seeded, splittable random streams. Every consumer derives an independent
// substream from (master seed, index), so results do not depend on execution
// order or on how work is spread across threads. mt19937_64 and the uniform
// mapping below are fully pinned, which keeps runs bit-reproducible.

#include <cstdint>
#include <random>

namespace hecsim {

// 64-bit finalizer with full avalanche (splitmix64).
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent seed for substream `index` of a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(master_seed ^ mix64(index));
}

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(mix64(seed)) {}

    static RngStream substream(std::uint64_t master_seed, std::uint64_t index) {
        return RngStream(derive_seed(master_seed, index));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw in [0, 1), 53-bit resolution.
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hecsim
