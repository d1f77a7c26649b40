#pragma once

#include <cstdint>
#include <random>

#include "tidiv/rational.hpp"

namespace tidiv {

// Deterministic seeded generator for all "general position" choices. Only
// the standardized mt19937_64 output stream is used (never
// std::uniform_int_distribution, whose mapping is implementation-defined),
// so identical seeds give identical choices on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [lo, hi] via rejection sampling.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    // Generic-position coefficients are drawn from a fixed integer box.
    static constexpr std::int64_t kCoeffBox = 10000;

    Rational box_coefficient() { return rat(uniform(-kCoeffBox, kCoeffBox)); }

    Rational nonzero_box_coefficient() {
        for (;;) {
            std::int64_t v = uniform(-kCoeffBox, kCoeffBox);
            if (v != 0) return rat(v);
        }
    }

    // Stable derived seed for a sub-task (seed chains stay reproducible).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace tidiv
