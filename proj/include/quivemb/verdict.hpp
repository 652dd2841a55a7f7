#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quivemb/rep.hpp"

namespace quivemb {

// One numerical condition: lhs <relation> rhs.
struct Inequality {
  std::string label;     // e.g. "[U,M] >= <dim U,e>  U=(1,1,0)"
  long lhs = 0;
  std::string relation;  // "<=" or ">="
  long rhs = 0;

  bool holds() const { return relation == "<=" ? lhs <= rhs : lhs >= rhs; }
};

// A violated inequality attached to one indecomposable U.
struct IndecomposableWitness {
  std::string family;  // which inequality family
  DimVector root;      // dim U
  Inequality inequality;
};

// Quotient U = N^k -> N^k/S = V by a simple S = S_vertex spanned by `vector`
// (coordinates of (N^k)_vertex); brackets = [U,N], [V,N], [U,M], [V,M].
struct QuotientWitness {
  std::size_t vertex = 0;
  std::size_t k = 0;
  Matrix vector;
  long brackets[4] = {0, 0, 0, 0};
};

// Surjection u -> u/kernel = v with brackets [u,N], [v,N], [u,M], [v,M].
struct SurjectionWitness {
  Representation u;
  SubspaceFamily kernel;
  long brackets[4] = {0, 0, 0, 0};
};

// Kernel of V^k -> S_vertex given by the functional `functional` on (V^k)_vertex;
// brackets = [V,V^k], [V,K], [U,V^k], [U,K].
struct TopWitness {
  std::size_t vertex = 0;
  std::size_t k = 0;
  Matrix functional;
  long brackets[4] = {0, 0, 0, 0};
};

struct DimensionWitness {
  DimVector e;
  DimVector d;
};

// A subspace U of V with dim Z(U) < dim U.
struct SubspaceWitness {
  Matrix basis;
  long dim_u = 0;
  long dim_zu = 0;
};

// A subrepresentation N of M with e(N) below the required bound.
struct SubrepWitness {
  DimVector dims;
  long value = 0;
  SubspaceFamily basis;  // empty when found through the Hom criterion
};

using Witness = std::variant<std::monostate, IndecomposableWitness, QuotientWitness, SurjectionWitness, TopWitness,
                             DimensionWitness, SubspaceWitness, SubrepWitness>;

struct Verdict {
  std::string criterion;
  bool holds = true;
  std::string field;  // field over which the verdict was computed
  Witness witness;
  std::vector<Inequality> ledger;
  std::optional<Morphism> embedding;
  std::optional<long> dimension;
  std::vector<std::string> notes;

  bool has_witness() const { return !std::holds_alternative<std::monostate>(witness); }
};

}  // namespace quivemb
