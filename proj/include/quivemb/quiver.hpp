#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace quivemb {

// Vertex-indexed vector of nonnegative integers.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<long> coords);
  DimVector(std::initializer_list<long> coords) : DimVector(std::vector<long>(coords)) {}

  static DimVector zero(std::size_t n) { return DimVector(std::vector<long>(n, 0)); }
  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  long operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<long>& coords() const { return coords_; }
  long total() const;
  bool is_zero() const { return total() == 0; }

  DimVector operator+(const DimVector& o) const;
  // Throws when a coordinate would become negative.
  DimVector operator-(const DimVector& o) const;
  DimVector operator*(long r) const;

  std::string to_string() const;

  auto operator<=>(const DimVector&) const = default;

 private:
  std::vector<long> coords_;
};

// Coordinatewise e <= d.
bool fits_in(const DimVector& e, const DimVector& d);

// All vectors e with 0 <= e <= d coordinatewise, in lexicographic order.
std::vector<DimVector> sub_dim_vectors(const DimVector& d);

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// One connected Dynkin component: family 'A', 'D' or 'E' and its rank.
struct DynkinComponent {
  char family;
  std::size_t rank;
  std::vector<std::size_t> vertices;
};

// Finite directed multigraph. Vertices are 0-based; labels are only used for
// file I/O and printing. Arrow order is significant: representation matrices
// are positional.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows, std::vector<std::string> labels = {});

  // 1 -> 2 -> ... -> n
  static Quiver equioriented_a(std::size_t n);
  // k parallel arrows i -> j
  static Quiver kronecker(std::size_t k);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  std::vector<std::size_t> outgoing(std::size_t v) const;
  std::vector<std::size_t> incoming(std::size_t v) const;

  bool acyclic() const { return acyclic_; }
  // Sources first. Throws for cyclic quivers.
  const std::vector<std::size_t>& topological_order() const;

  Quiver opposite() const;

  // Components of the underlying graph when every one of them is of type
  // A, D or E (any orientation); nullopt otherwise.
  std::optional<std::vector<DynkinComponent>> dynkin_components() const;
  bool is_dynkin() const { return dynkin_components().has_value(); }
  std::string dynkin_name() const;

  // Vertices of an equioriented A_n path in path order (source first), if the
  // quiver is one.
  std::optional<std::vector<std::size_t>> equioriented_path() const;

  // Same vertex count and arrow list; labels are ignored.
  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::string> labels_;
  bool acyclic_ = true;
  std::vector<std::size_t> topo_;
};

// <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// The functional e(.) = <., e> evaluated on d.
long functional(const Quiver& q, const DimVector& e, const DimVector& d);

}  // namespace quivemb
