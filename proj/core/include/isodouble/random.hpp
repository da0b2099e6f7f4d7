#pragma once

#include <cstdint>
#include <random>

namespace isodouble {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// SplitMix64 finalizer. Maps a counter to a well-mixed 64-bit word.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministic sub-seed for sample `index` of a run seeded with `master`.
/// Samples drawn from distinct sub-seeds are independent of evaluation
/// order, so Monte-Carlo loops may be split across threads freely.
std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Generator for one sample slot.
std::mt19937_64 sample_engine(std::uint64_t master, std::uint64_t index);

}  // namespace isodouble
