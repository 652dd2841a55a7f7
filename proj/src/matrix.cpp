#include "quivemb/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace quivemb {

namespace {

struct RationalOps {
  using value_type = mpq_class;
  bool zero(const mpq_class& x) const { return sgn(x) == 0; }
  mpq_class inv(const mpq_class& x) const { return 1 / x; }
  void scale(mpq_class& x, const mpq_class& s) const { x *= s; }
  // x -= f * y
  void sub_mul(mpq_class& x, const mpq_class& f, const mpq_class& y) const { x -= f * y; }
};

struct FiniteOps {
  using value_type = std::uint32_t;
  const Field* field;
  bool zero(std::uint32_t x) const { return x == 0; }
  std::uint32_t inv(std::uint32_t x) const { return field->inv(x); }
  void scale(std::uint32_t& x, std::uint32_t s) const { x = field->mul(x, s); }
  void sub_mul(std::uint32_t& x, std::uint32_t f, std::uint32_t y) const {
    x = field->sub(x, field->mul(f, y));
  }
};

template <class Ops>
std::vector<std::size_t> gauss_jordan(const Ops& ops, std::span<typename Ops::value_type> a,
                                      std::size_t rows, std::size_t cols, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && ops.zero(a[pr * cols + c])) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
    const auto pinv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) ops.scale(a[r * cols + j], pinv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.zero(a[i * cols + c])) continue;
      const auto f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) ops.sub_mul(a[i * cols + j], f, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  auto src = m.rationals();
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), src[i * cols + j].get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i * cols + j] = src[i * cols + j].get_num() * (den / src[i * cols + j].get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
    const mpz_class& piv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = piv * a[i * cols + j] - lead * a[r * cols + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * cols + j] = std::move(v);
      }
      a[i * cols + c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (field_.is_rational())
    rat_.resize(rows * cols);
  else
    fin_.assign(rows * cols, 0);
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         std::span<const long long> entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("from_ints: entry count mismatch");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, entries[i * cols + j]);
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  std::vector<long long> flat;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("from_ints: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_ints(field, nrows, ncols, flat);
}

Matrix Matrix::column_of(const Field& field, std::span<const long long> entries) {
  return from_ints(field, entries.size(), 1, entries);
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_rational()) return Scalar(rat_[r * cols_ + c]);
  return Scalar(fin_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (field_.is_rational())
    rat_[r * cols_ + c] = value.rational();
  else
    fin_[r * cols_ + c] = value.residue();
}

void Matrix::set_int(std::size_t r, std::size_t c, long long value) {
  if (field_.is_rational())
    rat_[r * cols_ + c] = mpq_class(mpz_class(std::to_string(value)));
  else
    fin_[r * cols_ + c] = field_.reduce(value);
}

bool Matrix::is_zero() const {
  if (field_.is_rational()) {
    for (const auto& x : rat_)
      if (sgn(x) != 0) return false;
    return true;
  }
  for (auto x : fin_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rational())
        t.rat_[j * rows_ + i] = rat_[i * cols_ + j];
      else
        t.fin_[j * rows_ + i] = fin_[i * cols_ + j];
    }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("block out of range");
  Matrix b(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      if (field_.is_rational())
        b.rat_[i * ncols + j] = rat_[(r0 + i) * cols_ + c0 + j];
      else
        b.fin_[i * ncols + j] = fin_[(r0 + i) * cols_ + c0 + j];
    }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
  require_same_field(*this, src, "set_block");
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("set_block out of range");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) {
      if (field_.is_rational())
        rat_[(r0 + i) * cols_ + c0 + j] = src.rat_[i * src.cols_ + j];
      else
        fin_[(r0 + i) * cols_ + c0 + j] = src.fin_[i * src.cols_ + j];
    }
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  if (field_.is_rational())
    for (auto& x : out.rat_) x *= s.rational();
  else
    for (auto& x : out.fin_) x = field_.mul(x, s.residue());
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs, "multiply");
  if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  if (field_.is_rational()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = rat_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.rat_[i * rhs.cols_ + j] += a * rhs.rat_[k * rhs.cols_ + j];
      }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = fin_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        auto& o = out.fin_[i * rhs.cols_ + j];
        o = field_.add(o, field_.mul(a, rhs.fin_[k * rhs.cols_ + j]));
      }
    }
  return out;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& rhs) {
  require_same_field(*this, rhs, "add");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("add: shape mismatch");
  if (field_.is_rational()) {
    const mpq_class& f = s.rational();
    for (std::size_t i = 0; i < rat_.size(); ++i) rat_[i] += f * rhs.rat_[i];
  } else {
    const std::uint32_t f = s.residue();
    for (std::size_t i = 0; i < fin_.size(); ++i) fin_[i] = field_.add(fin_[i], field_.mul(f, rhs.fin_[i]));
  }
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  out.add_scaled(Scalar::from_int(field_, 1), rhs);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  Matrix out = *this;
  out.add_scaled(Scalar::from_int(field_, -1), rhs);
  return out;
}

Matrix Matrix::hstack(std::span<const Matrix> parts) {
  if (parts.empty()) throw std::invalid_argument("hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != parts[0].rows_) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols_;
  }
  Matrix out(parts[0].field_, parts[0].rows_, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols_;
  }
  return out;
}

Matrix Matrix::vstack(std::span<const Matrix> parts) {
  if (parts.empty()) throw std::invalid_argument("vstack of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != parts[0].cols_) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows_;
  }
  Matrix out(parts[0].field_, rows, parts[0].cols_);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows_;
  }
  return out;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> parts) {
  if (parts.empty()) throw std::invalid_argument("block_diagonal of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Matrix out(parts[0].field_, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    out.set_block(r, c, p);
    r += p.rows_;
    c += p.cols_;
  }
  return out;
}

Matrix Matrix::reduced_to(const Field& target) const {
  if (target == field_) return *this;
  Matrix out(target, rows_, cols_);
  if (field_.is_rational()) {
    if (target.is_rational()) return *this;
    for (std::size_t i = 0; i < rat_.size(); ++i) {
      const std::uint32_t den = target.reduce(rat_[i].get_den());
      if (den == 0) throw std::invalid_argument("reduction: denominator vanishes in " + target.name());
      out.fin_[i] = target.mul(target.reduce(rat_[i].get_num()), target.inv(den));
    }
    return out;
  }
  if (field_.is_prime_field() && target.is_finite() && target.characteristic() == field_.characteristic()) {
    out.fin_ = fin_;
    return out;
  }
  throw std::invalid_argument("cannot reduce " + field_.name() + " to " + target.name());
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << ']';
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fin_ == b.fin_ && a.rat_ == b.rat_;
}

Echelon rref(const Matrix& m, std::optional<std::size_t> pivot_cols) {
  Echelon out{m, {}};
  const std::size_t limit = pivot_cols.value_or(m.cols());
  if (m.field().is_rational())
    out.pivots = gauss_jordan(RationalOps{}, out.reduced.rationals(), m.rows(), m.cols(), limit);
  else
    out.pivots = gauss_jordan(FiniteOps{&m.field()}, out.reduced.residues(), m.rows(), m.cols(), limit);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  if (m.field().is_rational()) return bareiss_rank(m);
  Matrix work = m;
  return gauss_jordan(FiniteOps{&m.field()}, work.residues(), m.rows(), m.cols(), m.cols()).size();
}

Matrix kernel_basis(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(m.field(), n, n - e.pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis.set_int(f, k, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar v = e.reduced.at(r, f);
      if (v.is_zero()) continue;
      basis.set(e.pivots[r], k, m.field().negate(v));
    }
    ++k;
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  require_same_field(m, b, "solve");
  const Matrix parts[] = {m, b};
  const Echelon e = rref(Matrix::hstack(parts), m.cols());
  const std::size_t rk = e.pivots.size();
  for (std::size_t r = rk; r < m.rows(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!e.reduced.at(r, m.cols() + j).is_zero()) return std::nullopt;
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(e.pivots[r], j, e.reduced.at(r, m.cols() + j));
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  Scalar det = Scalar::from_int(f, 1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero()) ++p;
    if (p == n) return Scalar::from_int(f, 0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar t = a.at(p, j);
        a.set(p, j, a.at(c, j));
        a.set(c, j, t);
      }
      det = f.negate(det);
    }
    const Scalar pivot = a.at(c, c);
    det = f.times(det, pivot);
    const Scalar pinv = f.inverse(pivot);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      const Scalar factor = f.negate(f.times(a.at(r, c), pinv));
      for (std::size_t j = c; j < n; ++j) a.set(r, j, f.plus(a.at(r, j), f.times(factor, a.at(c, j))));
    }
  }
  return det;
}

Matrix column_space_basis(const Matrix& m) {
  const Echelon e = rref(m);
  Matrix out(m.field(), m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.set_block(0, k, m.column(e.pivots[k]));
  return out;
}

Matrix complement_columns(const Matrix& basis) {
  const std::size_t n = basis.rows();
  const Matrix parts[] = {basis, Matrix::identity(basis.field(), n)};
  const Echelon e = rref(Matrix::hstack(parts));
  Matrix out(basis.field(), n, n - basis.cols());
  std::size_t k = 0;
  for (auto p : e.pivots) {
    if (p < basis.cols()) continue;
    if (k == out.cols()) throw std::invalid_argument("complement_columns: basis columns are dependent");
    out.set_int(p - basis.cols(), k++, 1);
  }
  if (k != out.cols()) throw std::invalid_argument("complement_columns: basis columns are dependent");
  return out;
}

Matrix flatten(const Matrix& m) {
  Matrix out(m.field(), m.size(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i * m.cols() + j, 0, m.at(i, j));
  return out;
}

}  // namespace quivemb
