#pragma once

#include <cstdint>
#include <optional>

#include "quivemb/rep.hpp"

namespace quivemb {

// Number of elements of a Hom space over F_q, saturating at UINT64_MAX.
std::uint64_t hom_space_size(const HomBasis& basis);

// Walks every element of Hom over a finite field in coefficient order and
// returns the first injective one. Throws std::length_error when the space has
// more than `limit` elements.
std::optional<Morphism> scan_injective(const HomBasis& basis, std::uint64_t limit);
std::optional<Morphism> scan_injective_serial(const HomBasis& basis, std::uint64_t limit);

// Random combinations of the basis; trial t uses derive_seed(seed, t). Returns
// the injective sample with the smallest trial index.
std::optional<Morphism> sample_injective(const HomBasis& basis, std::size_t trials, std::uint64_t seed,
                                         long box = kDefaultBox);
std::optional<Morphism> sample_injective_serial(const HomBasis& basis, std::size_t trials, std::uint64_t seed,
                                                long box = kDefaultBox);

}  // namespace quivemb
