#pragma once

#include <cstdint>
#include <random>

namespace bloomga {

// All stochastic operators take an explicit Rng so that a seed fully
// determines a run within one build.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

/// Uniform draw from [0, count).
inline std::size_t uniform_index(Rng& rng, std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

/// True with the given probability.
inline bool chance(Rng& rng, double probability) {
    if (probability <= 0.0) return false;
    if (probability >= 1.0) return true;
    return std::bernoulli_distribution(probability)(rng);
}

}  // namespace bloomga
