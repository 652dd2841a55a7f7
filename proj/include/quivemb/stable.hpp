#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivemb/criteria.hpp"
#include "quivemb/rep.hpp"

namespace quivemb {

// A subspace Z of Hom(V, W) given by linearly independent w_dim x v_dim maps.
struct ZSpace {
  ZSpace(Field field, std::size_t v_dim, std::size_t w_dim, std::vector<Matrix> basis);

  Field field;
  std::size_t v_dim;
  std::size_t w_dim;
  std::vector<Matrix> basis;

  // Z(U) = span{f(u) : f in Z, u in U}.
  Matrix image_of(const Matrix& u) const;
};

// K_k representation V => W with arrow l acting by basis[l].
Representation kronecker_rep(const ZSpace& z);

// dim Z(U) >= dim U for every subspace U of V. Decided twice, by walking
// subspaces of V and by min_slope of the K_k representation at
// e = (k-1, 1); throws std::logic_error if the two disagree.
Verdict check_z_hypothesis(const ZSpace& z, std::uint64_t budget = 10'000'000);

struct StableSearchReport {
  bool found = false;
  std::size_t r = 0;
  std::optional<Matrix> block;          // find_injective_block: r*w x r*v
  std::optional<Morphism> embedding;    // search_stable_embedding: n^r -> m^r
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;
  std::string reason;
};

// Random r x r block matrices over Z for r = 1..r_max; trial t at level r
// uses derive_seed(derive_seed(seed, r), t).
StableSearchReport find_injective_block(const ZSpace& z, std::size_t r_max, std::size_t trials, std::uint64_t seed);
StableSearchReport find_injective_block_serial(const ZSpace& z, std::size_t r_max, std::size_t trials,
                                               std::uint64_t seed);

// Block morphisms n^r -> m^r with random Hom(n, m) combinations as blocks.
StableSearchReport search_stable_embedding(const Representation& n, const Representation& m, std::size_t r_max,
                                           std::size_t trials, std::uint64_t seed);
StableSearchReport search_stable_embedding_serial(const Representation& n, const Representation& m,
                                                  std::size_t r_max, std::size_t trials, std::uint64_t seed);

// A vertex at which no element of the (infinite-field) span of `basis` is
// injective, decided by testing all maximal minors on the grid {0..n_v}^h,
// h = basis.dim(). nullopt means some element of the span is injective.
std::optional<std::size_t> degenerate_vertex(const HomBasis& basis);

// Upper bound for the generic dim Hom(m, X), dim X = r*e: the minimum over
// `samples` random X.
struct GenericHomEstimate {
  DimVector e;
  std::size_t r = 0;
  long estimate = 0;
  std::size_t samples = 0;
};
GenericHomEstimate generic_hom(const Representation& m, const DimVector& e, std::size_t r, std::size_t samples,
                               std::uint64_t seed);
GenericHomEstimate generic_hom_serial(const Representation& m, const DimVector& e, std::size_t r,
                                      std::size_t samples, std::uint64_t seed);

// Coordinatewise maximal rank of random maps m -> X over the sampled X of
// dimension e with the smallest End (the generic ones).
struct GenericRank {
  DimVector ranks;
  std::size_t samples = 0;
  std::size_t generic_samples = 0;
};
GenericRank generic_rank_vector(const Representation& m, const DimVector& e, std::size_t samples, std::uint64_t seed);

struct StabilizationReport {
  DimVector e;
  long e_of_m = 0;
  bool hypothesis_verified = false;  // false: assumed
  std::optional<long> min_slope;
  struct Row {
    std::size_t r;
    long estimate;
    long target;  // r * e(m)
  };
  std::vector<Row> rows;
  std::optional<std::size_t> threshold;  // least r with equality from there on
  std::size_t samples = 0;
};

// Compares generic_hom(m, e, r) with r*e(m) for r in [r_min, r_max]. The
// hypothesis e(N) >= 0 is checked by min_slope over finite fields (or with a
// table); a violation throws std::domain_error. An estimate below r*e(m)
// contradicts hom >= <dim M, dim X> and throws std::logic_error.
StabilizationReport check_stabilization(const Representation& m, const DimVector& e, std::size_t r_min,
                                        std::size_t r_max, std::size_t samples, std::uint64_t seed,
                                        const IndecomposableTable* table = nullptr);

}  // namespace quivemb
