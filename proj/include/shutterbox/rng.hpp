// rng.hpp
// Counter-based splittable pseudorandom stream. Every output is a pure
// function of (seed, stream id, draw index): streams can be created
// independently per run index, so batch results do not depend on
// evaluation order or parallelism degree, and sequences are identical
// across platforms.

#pragma once

#include <cstdint>

namespace shutterbox {

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ mix(stream + golden))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += golden);
        return mix(z);
    }

    // Uniform double in [0,1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace shutterbox
