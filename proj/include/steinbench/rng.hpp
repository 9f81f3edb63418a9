#pragma once

#include <cstdint>

namespace steinbench {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Counter-based uniform variate in (-1, 1) keyed by (seed, sample, cell).
// Stateless, so any partition of the sample range gives the same stream.
double uniform_pm1(std::uint64_t seed, std::uint64_t sample, std::uint64_t cell);

}  // namespace steinbench
