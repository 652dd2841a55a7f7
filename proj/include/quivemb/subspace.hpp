#pragma once

#include <cstdint>
#include <functional>

#include <gmpxx.h>

#include "quivemb/matrix.hpp"

namespace quivemb {

// Number of k-dimensional subspaces of F_q^n.
mpz_class gaussian_binomial(long n, long k, std::uint64_t q);

// Calls visit(basis) for every k-dimensional subspace of F_q^n, basis columns
// being the rows of its reduced row echelon form. Pivot sets come in
// lexicographic order, free entries in odometer order. Stops early when visit
// returns false; the return value says whether the walk ran to the end.
bool for_each_subspace(const Field& field, std::size_t n, std::size_t k,
                       const std::function<bool(const Matrix&)>& visit);

// Same for subspaces U with span(a) <= U <= span(b), dim U = k. The columns of
// a must lie in span(b); both may be dependent.
bool for_each_subspace_between(const Matrix& a, const Matrix& b, std::size_t k,
                               const std::function<bool(const Matrix&)>& visit);

// Reduced row echelon form of the column space, as a canonical key.
Matrix canonical_basis(const Matrix& columns);

// Columns spanning the intersection of two column spaces.
Matrix intersect(const Matrix& a, const Matrix& b);
// Columns spanning {x : m x in span(u)}.
Matrix preimage(const Matrix& m, const Matrix& u);
// Columns spanning the annihilator {x : u^T x = 0}.
Matrix annihilator(const Matrix& u);

}  // namespace quivemb
