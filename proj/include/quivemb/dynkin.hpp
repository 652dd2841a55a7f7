#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quivemb/rep.hpp"

namespace quivemb {

// Positive roots of a Dynkin quiver: the d > 0 with <d,d> = 1. Sorted by total
// dimension, then lexicographically (so the simples come first).
std::vector<DimVector> positive_roots(const Quiver& q);

struct SamplingConfig {
  std::uint64_t seed = 0;
  std::size_t retries = 32;
};

// A representation of dimension vector `root` with End = k, found by
// certified random sampling. Fields with fewer than five elements are sampled
// over Q, reduced, and certified again after reduction.
Representation indecomposable(const Quiver& q, const DimVector& root, const Field& field,
                              const SamplingConfig& config = {});

// One indecomposable per positive root together with H[u][v] = [reps[u], reps[v]].
struct IndecomposableTable {
  Quiver quiver;
  Field field;
  std::vector<DimVector> roots;
  std::vector<Representation> reps;
  std::vector<std::vector<long>> hom;
  std::vector<bool> projective;
  std::vector<bool> injective;

  static IndecomposableTable build(const Quiver& q, const Field& field, const SamplingConfig& config = {});
  // Table from given representations, one per root in positive_roots order.
  // Throws unless they are the rigid bricks of those dimension vectors.
  static IndecomposableTable from_reps(const Quiver& q, const Field& field, std::vector<Representation> reps);

  std::size_t size() const { return roots.size(); }
  std::optional<std::size_t> index_of(const DimVector& root) const;
  long ext(std::size_t u, std::size_t v) const;
  // Recomputes every invariant (End = k, Ext = 0, H exact and invertible).
  void validate() const;

  // Rational inverse of H, cached at build time.
  Matrix hom_inverse;
};

// Multiplicity of each table root as a direct summand of x (indexed like
// table.roots). Throws when the Hom vector does not decompose integrally.
std::vector<long> decompose(const Representation& x, const IndecomposableTable& table);

// Direct sum of table reps with the given multiplicities.
Representation assemble(const IndecomposableTable& table, const std::vector<long>& multiplicities);

// Isomorphism assemble(table, decompose(x)) -> x built summand by summand.
Morphism decomposition_isomorphism(const Representation& x, const IndecomposableTable& table,
                                   const std::vector<long>& multiplicities);

// Multiplicities of the Ext-orthogonal decomposition of e (the summands of G_e).
std::vector<long> canonical_decomposition(const DimVector& e, const IndecomposableTable& table);
Representation generic_rep(const DimVector& e, const IndecomposableTable& table);

// True iff Ext(G_e, G_{d-e}) = 0.
bool check_generic_embedding(const DimVector& e, const DimVector& d, const IndecomposableTable& table);
// An explicit injective morphism G_e -> G_d, searched exhaustively over small
// finite fields and by sampling otherwise.
std::optional<Morphism> find_generic_embedding(const DimVector& e, const DimVector& d,
                                               const IndecomposableTable& table, std::uint64_t seed = 0);

}  // namespace quivemb
