#include "quivemb/search.hpp"

#include <limits>
#include <stdexcept>

namespace quivemb {

namespace {

std::vector<Scalar> coefficients_of(std::uint64_t code, std::size_t dim, std::uint32_t q) {
  std::vector<Scalar> c(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    c[k] = Scalar(static_cast<std::uint32_t>(code % q));
    code /= q;
  }
  return c;
}

void require_finite(const HomBasis& basis, std::uint64_t limit) {
  if (!basis.source->field().is_finite()) throw std::invalid_argument("exhaustive scan needs a finite field");
  const std::uint64_t size = hom_space_size(basis);
  if (size > limit)
    throw std::length_error("Hom space has " + std::to_string(size) + " elements, above the limit " +
                            std::to_string(limit));
}

bool can_be_injective(const HomBasis& basis) {
  for (std::size_t v = 0; v < basis.source->quiver().vertex_count(); ++v)
    if (basis.source->dim(v) > basis.target->dim(v)) return false;
  return true;
}

}  // namespace

std::uint64_t hom_space_size(const HomBasis& basis) {
  const std::uint64_t q = basis.source->field().order();
  if (q == 0) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    if (size > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    size *= q;
  }
  return size;
}

std::optional<Morphism> scan_injective_serial(const HomBasis& basis, std::uint64_t limit) {
  require_finite(basis, limit);
  if (!can_be_injective(basis)) return std::nullopt;
  const std::uint64_t size = hom_space_size(basis);
  const std::uint32_t q = basis.source->field().order();
  for (std::uint64_t code = 0; code < size; ++code) {
    Morphism f = basis.combination(coefficients_of(code, basis.dim(), q));
    if (is_injective(f)) return f;
  }
  return std::nullopt;
}

std::optional<Morphism> scan_injective(const HomBasis& basis, std::uint64_t limit) {
  require_finite(basis, limit);
  if (!can_be_injective(basis)) return std::nullopt;
  const std::uint64_t size = hom_space_size(basis);
  const std::uint32_t q = basis.source->field().order();
  std::uint64_t best = size;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::uint64_t code = 0; code < size; ++code) {
    if (code >= best) continue;
    if (is_injective(basis.combination(coefficients_of(code, basis.dim(), q)))) best = code;
  }
  if (best == size) return std::nullopt;
  return basis.combination(coefficients_of(best, basis.dim(), q));
}

std::optional<Morphism> sample_injective_serial(const HomBasis& basis, std::size_t trials, std::uint64_t seed,
                                                long box) {
  if (!can_be_injective(basis)) return std::nullopt;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    Morphism f = basis.random_element(rng, box);
    if (is_injective(f)) return f;
  }
  return std::nullopt;
}

std::optional<Morphism> sample_injective(const HomBasis& basis, std::size_t trials, std::uint64_t seed, long box) {
  if (!can_be_injective(basis)) return std::nullopt;
  std::size_t best = trials;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (std::size_t t = 0; t < trials; ++t) {
    if (t >= best) continue;
    Rng rng(derive_seed(seed, t));
    if (is_injective(basis.random_element(rng, box))) best = t;
  }
  if (best == trials) return std::nullopt;
  Rng rng(derive_seed(seed, best));
  return basis.random_element(rng, box);
}

}  // namespace quivemb
