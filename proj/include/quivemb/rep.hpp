#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "quivemb/matrix.hpp"
#include "quivemb/quiver.hpp"
#include "quivemb/random.hpp"

namespace quivemb {

// Finite-dimensional representation: a vector space k^{dims[i]} per vertex and
// a dims[target] x dims[source] matrix per arrow, all over one field.
class Representation {
 public:
  Representation(Quiver quiver, Field field, DimVector dims, std::vector<Matrix> arrow_mats);

  static Representation zero(const Quiver& quiver, const Field& field);
  static Representation simple(const Quiver& quiver, const Field& field, std::size_t vertex);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return static_cast<std::size_t>(dims_[v]); }
  const Matrix& arrow(std::size_t a) const { return mats_[a]; }
  const std::vector<Matrix>& arrow_mats() const { return mats_; }
  std::size_t total_dim() const { return static_cast<std::size_t>(dims_.total()); }

  Representation reduced_to(const Field& target) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.quiver_ == b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.mats_ == b.mats_;
  }

 private:
  Quiver quiver_;
  Field field_;
  DimVector dims_;
  std::vector<Matrix> mats_;
};

using RepPtr = std::shared_ptr<const Representation>;

// Per-vertex linear maps f_i : source_i -> target_i with
// f_t X_a = Y_a f_s for every arrow a : s -> t.
class Morphism {
 public:
  Morphism(RepPtr source, RepPtr target, std::vector<Matrix> vertex_mats);
  Morphism(const Representation& source, const Representation& target, std::vector<Matrix> vertex_mats);

  static Morphism identity(const Representation& x);
  static Morphism zero(RepPtr source, RepPtr target);

  const Representation& source() const { return *source_; }
  const Representation& target() const { return *target_; }
  const RepPtr& source_ptr() const { return source_; }
  const RepPtr& target_ptr() const { return target_; }
  const Matrix& at(std::size_t v) const { return mats_[v]; }
  const std::vector<Matrix>& vertex_mats() const { return mats_; }

  // Rank of each vertex map.
  std::vector<long> rank_vector() const;

  // Skips the intertwining check; for morphisms produced by exact kernels.
  struct Trusted {};
  Morphism(Trusted, RepPtr source, RepPtr target, std::vector<Matrix> vertex_mats);

 private:
  RepPtr source_;
  RepPtr target_;
  std::vector<Matrix> mats_;
};

// this after that: (g o f)
Morphism compose(const Morphism& g, const Morphism& f);

bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);

// Basis of Hom(source, target) as the kernel of the intertwining system.
struct HomBasis {
  RepPtr source;
  RepPtr target;
  Matrix coordinates;  // columns are flattened basis morphisms
  std::vector<Morphism> morphisms;

  std::size_t dim() const { return morphisms.size(); }
  Morphism combination(std::span<const Scalar> coeffs) const;
  Morphism random_element(Rng& rng, long box = kDefaultBox) const;
};

// Matrix of f -> (f_t X_a - Y_a f_s)_a on the flattened vertex matrices of f
// (vertex-major, each f_i row-major).
Matrix intertwining_system(const Representation& x, const Representation& y);

HomBasis hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

// dim Ext^1(x, y) = dim Hom(x, y) - <dim x, dim y> (hereditary path algebra).
long ext_dim(const Representation& x, const Representation& y);
// Cokernel of the intertwining system, i.e. Ext^1 read off the standard
// projective resolution; must agree with ext_dim.
long ext_dim_via_resolution(const Representation& x, const Representation& y);

// Joint kernel of the arrows leaving vertex v (columns = basis). Its dimension
// is dim Hom(S_v, x).
Matrix socle_at(const Representation& x, std::size_t v);

// Per-vertex spanning sets (columns) of a candidate subrepresentation.
using SubspaceFamily = std::vector<Matrix>;

bool is_arrow_stable(const Representation& x, const SubspaceFamily& sub);

struct Quotient {
  Representation rep;
  Morphism projection;  // x -> rep, surjective with kernel sub
};
Quotient quotient(const Representation& x, const SubspaceFamily& sub);

struct Subrepresentation {
  Representation rep;
  Morphism inclusion;  // rep -> x, injective with image sub
};
Subrepresentation restrict_to(const Representation& x, const SubspaceFamily& sub);

Representation direct_sum(std::span<const Representation> parts);
Representation power(const Representation& x, std::size_t r);

// Morphism x^c -> y^r whose (row, col) block is blocks[row * c + col].
Morphism block_morphism(const Representation& x, std::size_t c, const Representation& y, std::size_t r,
                        std::span<const Morphism> blocks);
// Block diagonal f_1 (+) ... (+) f_n between the direct sums.
Morphism direct_sum(std::span<const Morphism> parts);

Representation random_representation(const Quiver& q, const DimVector& d, const Field& field,
                                     std::uint64_t seed, long box = kDefaultBox);

// Paths i -> j give (P_i)_j; arrows act by concatenation.
Representation build_projective(const Quiver& q, const Field& field, std::size_t i);
// Paths j -> i give (I_i)_j; the dual of the opposite projective.
Representation build_injective(const Quiver& q, const Field& field, std::size_t i);

// k-linear dual over the opposite quiver: same dims, transposed arrows.
Representation dual(const Representation& x);
// D(f) : D(target) -> D(source)
Morphism dual(const Morphism& f);

}  // namespace quivemb
