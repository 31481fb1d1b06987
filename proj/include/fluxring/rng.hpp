#pragma once

// Seedable, splittable random source for the switching simulation.
//
// Engine: std::mt19937_64 (its output sequence is fixed by the standard),
// seeded through std::seed_seq from the 64-bit run seed and a 64-bit stream
// index. Each flux point of a sweep draws from its own stream, so results do
// not depend on evaluation order or thread count. Variates are produced here
// rather than through <random> distributions, whose algorithms are
// implementation-defined.

#include <cmath>
#include <cstdint>
#include <random>

namespace fluxring {

class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream) : engine_(make_engine(seed, stream)) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Exponential variate with the given mean (inverse CDF).
    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

private:
    static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                          0x9e3779b9u};
        return std::mt19937_64(seq);
    }

    std::mt19937_64 engine_;
};

}  // namespace fluxring
