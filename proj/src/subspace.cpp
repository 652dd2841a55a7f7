#include "quivemb/subspace.hpp"

#include <stdexcept>
#include <vector>

namespace quivemb {

mpz_class gaussian_binomial(long n, long k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  mpz_class num = 1, den = 1, qq = static_cast<unsigned long>(q);
  for (long i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

bool for_each_subspace(const Field& field, std::size_t n, std::size_t k,
                       const std::function<bool(const Matrix&)>& visit) {
  if (!field.is_finite()) throw std::invalid_argument("subspace enumeration needs a finite field");
  if (k > n) return true;
  const std::uint32_t q = field.order();
  std::vector<std::size_t> piv(k);
  for (std::size_t r = 0; r < k; ++r) piv[r] = r;
  while (true) {
    // Free slots: (row r, column c) with c > piv[r] and c not a pivot.
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) slots.emplace_back(r, c);
    Matrix basis(field, n, k);
    for (std::size_t r = 0; r < k; ++r) basis.set_int(piv[r], r, 1);
    std::vector<std::uint32_t> val(slots.size(), 0);
    while (true) {
      if (!visit(basis)) return false;
      std::size_t s = 0;
      while (s < slots.size() && ++val[s] == q) {
        val[s] = 0;
        basis.set(slots[s].second, slots[s].first, Scalar(0u));
        ++s;
      }
      if (s == slots.size()) break;
      basis.set(slots[s].second, slots[s].first, Scalar(val[s]));
    }
    // Next pivot combination.
    std::size_t r = k;
    while (r > 0 && piv[r - 1] == n - k + r - 1) --r;
    if (r == 0) return true;
    ++piv[r - 1];
    for (std::size_t t = r; t < k; ++t) piv[t] = piv[t - 1] + 1;
  }
}

bool for_each_subspace_between(const Matrix& a, const Matrix& b, std::size_t k,
                               const std::function<bool(const Matrix&)>& visit) {
  const Field& f = b.field();
  const Matrix bb = b.cols() ? column_space_basis(b) : b;
  const std::size_t bd = bb.cols();
  Matrix coords(f, bd, 0);
  if (a.cols() > 0) {
    auto c = solve(bb, a);
    if (!c) throw std::invalid_argument("lower subspace is not contained in the upper one");
    coords = c->cols() ? column_space_basis(*c) : *c;
  }
  const std::size_t ad = coords.cols();
  if (k < ad || k > bd) return true;
  const Matrix comp = complement_columns(coords);
  return for_each_subspace(f, bd - ad, k - ad, [&](const Matrix& t) {
    const Matrix parts[] = {coords, comp * t};
    return visit(bb * Matrix::hstack(parts));
  });
}

Matrix canonical_basis(const Matrix& columns) {
  const Echelon e = rref(columns.transpose());
  return e.reduced.block(0, 0, e.pivots.size(), columns.rows()).transpose();
}

Matrix intersect(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.field(), a.rows(), 0);
  const Matrix parts[] = {a, b.scaled(Scalar::from_int(a.field(), -1))};
  const Matrix k = kernel_basis(Matrix::hstack(parts));
  const Matrix span = a * k.block(0, 0, a.cols(), k.cols());
  return span.cols() ? column_space_basis(span) : span;
}

Matrix preimage(const Matrix& m, const Matrix& u) {
  // x with m x = u y for some y: kernel of [m | -u], projected to x.
  const Matrix parts[] = {m, u.scaled(Scalar::from_int(m.field(), -1))};
  const Matrix joint = u.cols() ? Matrix::hstack(parts) : m;
  const Matrix k = kernel_basis(joint);
  const Matrix x = k.block(0, 0, m.cols(), k.cols());
  return x.cols() ? column_space_basis(x) : x;
}

Matrix annihilator(const Matrix& u) {
  if (u.cols() == 0) return Matrix::identity(u.field(), u.rows());
  return kernel_basis(u.transpose());
}

}  // namespace quivemb
