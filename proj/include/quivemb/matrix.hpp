#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quivemb/field.hpp"

namespace quivemb {

// Dense row-major matrix over an exact field. Finite-field entries live in a
// residue buffer, rational entries in a GMP buffer; exactly one is in use.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          std::span<const long long> entries);
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<long long>> rows);
  // Column vector from integer entries.
  static Matrix column_of(const Field& field, std::span<const long long> entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set_int(std::size_t r, std::size_t c, long long value);

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix scaled(const Scalar& s) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  // this += s * rhs
  void add_scaled(const Scalar& s, const Matrix& rhs);

  static Matrix hstack(std::span<const Matrix> parts);
  static Matrix vstack(std::span<const Matrix> parts);
  static Matrix block_diagonal(std::span<const Matrix> parts);

  // Reinterpretation of the same field elements over another field: integers
  // are reduced, rationals need denominators invertible in the target.
  Matrix reduced_to(const Field& target) const;

  std::span<const std::uint32_t> residues() const { return fin_; }
  std::span<std::uint32_t> residues() { return fin_; }
  std::span<const mpq_class> rationals() const { return rat_; }
  std::span<mpq_class> rationals() { return rat_; }

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> fin_;
  std::vector<mpq_class> rat_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination, pivoting on the first nonzero entry in column
// order. Only the first `pivot_cols` columns are eligible as pivots (all when
// omitted), which is what augmented solves need.
Echelon rref(const Matrix& m, std::optional<std::size_t> pivot_cols = std::nullopt);

// Rank over the matrix's field. Rationals go through fraction-free (Bareiss)
// elimination on the row-wise denominator-cleared integer matrix.
std::size_t rank(const Matrix& m);

// Columns form a basis of the right kernel; cols() - rank(m) of them.
Matrix kernel_basis(const Matrix& m);

// Some x with m x = b, or nullopt when inconsistent. b may have several columns.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

// Square matrices only.
Scalar determinant(const Matrix& m);

// Linearly independent subset of the columns spanning the column space.
Matrix column_space_basis(const Matrix& m);

// Standard basis vectors completing the (independent) columns of `basis` to a
// basis of the ambient space.
Matrix complement_columns(const Matrix& basis);

// Entry-wise, row-major column vector of all entries.
Matrix flatten(const Matrix& m);

}  // namespace quivemb
