#pragma once

// Seeded channel simulation: random message, random error pattern of fixed
// weight, geometric decoding.
//
// Randomness: trial t uses std::mt19937_64 seeded with splitmix64(seed + t).
// Uniform draws in [0, n) reject raw 64-bit outputs at or above the largest
// multiple of n, then reduce mod n. Per trial, in order: x (GF(q²) encoding),
// index of y in S, then for each error slot a position (partial Fisher–Yates
// over 0..N−1) and a nonzero error value 1 + draw(q−1) added to the symbol.

#include <cstdint>
#include <ostream>

#include "hmds/codespec.hpp"

namespace hmds {

struct SimulationReport {
  std::uint64_t trials = 0;
  std::size_t error_weight = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t miscorrections = 0;
  std::uint64_t seed = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Throws std::invalid_argument if error_weight > N.
SimulationReport simulate(const CodeSpec& spec, std::size_t error_weight, std::uint64_t trials, std::uint64_t seed);

void print_simulation(std::ostream& out, const SimulationReport& r);

}  // namespace hmds
