#pragma once

#include <cstdint>
#include <random>

namespace crossnum {

/// All stochastic code draws from this generator.
using Rng = std::mt19937_64;

/// Independent stream `stream` of a run seeded with `seed`; parallel
/// workers and search restarts each take their own stream.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace crossnum
