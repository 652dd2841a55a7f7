#pragma once

#include <cstdint>
#include <random>

#include "quivemb/matrix.hpp"

namespace quivemb {

using Rng = std::mt19937_64;

// splitmix64 finalizer of (seed, index): per-trial seeds that do not depend on
// how trials are scheduled across threads.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform over F_q, or uniform over the integers in [-box, box] for Q.
Scalar random_scalar(const Field& field, Rng& rng, long box);
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng, long box);

inline constexpr long kDefaultBox = 100;

}  // namespace quivemb
