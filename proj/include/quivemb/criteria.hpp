#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quivemb/dynkin.hpp"
#include "quivemb/verdict.hpp"

namespace quivemb {

// [U,M] and [M,U] for every table indecomposable U.
struct HomProfile {
  DimVector dims;
  std::vector<long> into;    // [U,M]
  std::vector<long> out_of;  // [M,U]
};
HomProfile hom_profile(const Representation& m, const IndecomposableTable& table);

// Holds iff [U,M] >= <dim U, e> for every indecomposable U.
Verdict check_grassmannian_nonempty(const Representation& m, const DimVector& e, const IndecomposableTable& table);
Verdict check_grassmannian_nonempty(const HomProfile& m, const DimVector& e, const IndecomposableTable& table);

// Sufficient condition for Gr_e(M) to be irreducible of dimension <e, dim M - e>:
// [M,U] <= <e, dim U> for non-injective U and [U,M] <= <dim U, dim M - e> for
// non-projective U.
Verdict check_grassmannian_irreducible(const Representation& m, const DimVector& e,
                                       const IndecomposableTable& table);
Verdict check_grassmannian_irreducible(const HomProfile& m, const DimVector& e, const IndecomposableTable& table);

enum class Nc2Mode {
  Exhaustive,  // every End(N)-stable subspace of each socle component (finite fields)
  RawVectors,  // every socle vector of N^k up to scalar, k <= [S_i,N] (finite fields, small cases)
  Sampling,    // random socle vectors of random powers (any field)
};

struct Nc2Config {
  Nc2Mode mode = Nc2Mode::Exhaustive;
  std::size_t samples = 256;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;  // socle vectors visited
};

// [N^k,N] - [N^k/S,N] <= [N^k,M] - [N^k/S,M] for simple S = S_i inside N^k.
Verdict check_nc2(const Representation& n, const Representation& m, const Nc2Config& config = {});

// The same inequality on random surjections u -> u/s.
Verdict check_nc2_random_surjections(const Representation& n, const Representation& m, std::size_t trials,
                                     std::uint64_t seed);

// Exhaustive nc2 data of a fixed n against the direct sums of a table: one row
// per (vertex, stable subspace W) holding dim W and dim Hom(N,U)W for every U.
struct Nc2Profile {
  struct Row {
    std::size_t vertex;
    long dim;
    std::vector<long> per_root;
  };
  std::vector<Row> rows;
};
Nc2Profile nc2_profile(const Representation& n, const IndecomposableTable& table, const Nc2Config& config = {});
// nc2 for n against the direct sum with these multiplicities.
bool nc2_holds(const Nc2Profile& profile, const std::vector<long>& multiplicities);

// A representation together with its Auslander decomposition and an
// isomorphism from the assembled direct sum.
struct Decomposed {
  Representation rep;
  std::vector<long> multiplicities;
  Morphism iso;  // assemble(table, multiplicities) -> rep
};
Decomposed decompose_with_iso(const Representation& x, const IndecomposableTable& table);

// Equioriented A_n: prefix-sum inequalities on interval multiplicities; on
// success carries an injective n -> m assembled from interval embeddings.
Verdict an_criterion(const Representation& n, const Representation& m, const IndecomposableTable& table);
Verdict an_criterion(const Decomposed& n, const Decomposed& m, const IndecomposableTable& table);

// Stable surjections u^r -> v^r: for every simple quotient V^k -> S_i with
// kernel K, [V,V^k] - [V,K] <= [U,V^k] - [U,K]. Computed on top functionals.
Verdict check_dual_surjection(const Representation& u, const Representation& v, const Nc2Config& config = {});

// min e(N) over subrepresentations N of m, with a subrepresentation attaining
// it. Finite fields walk Grassmannians; otherwise `table` (Dynkin) is used.
struct SlopeResult {
  long value;
  SubrepWitness attained_by;
};
SlopeResult min_slope(const Representation& m, const DimVector& e, const IndecomposableTable* table = nullptr);

// e(m) = 0 and e(N) >= 0 for every subrepresentation N.
Verdict is_semistable(const Representation& m, const DimVector& e, const IndecomposableTable* table = nullptr);

// End-stable subspaces of F_q^s (nonzero), ordered by dimension then echelon
// form. `ops` spans the acting algebra and must contain the identity.
std::vector<Matrix> stable_subspaces(const Field& field, std::size_t s, const std::vector<Matrix>& ops,
                                     std::uint64_t budget);

}  // namespace quivemb
