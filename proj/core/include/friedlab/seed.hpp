#pragma once

#include <cstdint>

namespace friedlab {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'f41e'd000'0001ULL;

/// Seed for randomized suites: FRIEDLAB_SEED if set and parseable, otherwise kDefaultSeed.
std::uint64_t default_seed();

}  // namespace friedlab
