#include "quivemb/field.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace quivemb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

Poly digits(std::uint32_t x, std::uint32_t p, unsigned k) {
  Poly out(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
  return x;
}

// Product of a and b reduced modulo the monic polynomial `modulus` of degree k.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  Poly prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i)
      prod[d - k + i] = (prod[d - k + i] + p * p - c * modulus[i] % p) % p;
  }
  prod.resize(k);
  return prod;
}

bool is_irreducible(const Poly& modulus, std::uint32_t p) {
  // Irreducible iff the quotient ring has no zero divisors; brute force is fine
  // for q <= 256.
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  std::uint32_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = a; b < q; ++b) {
      Poly prod = mulmod(digits(a, p, k), digits(b, p, k), modulus, p);
      if (encode(prod, p) == 0) return false;
    }
  return true;
}

std::shared_ptr<const Field::Tables> build_tables(std::uint32_t p, unsigned k);

}  // namespace

Field Field::rationals() { return Field(Kind::Rationals, 0, 0, nullptr); }

Field Field::finite(std::uint32_t order) {
  if (order < 2) throw std::invalid_argument("field order must be >= 2");
  if (is_prime(order)) {
    if (order >= (1u << 31)) throw std::invalid_argument("prime field characteristic must be < 2^31");
    return Field(Kind::Finite, order, order, nullptr);
  }
  std::uint32_t p = 2;
  while (order % p != 0) ++p;
  unsigned k = 0;
  std::uint32_t rest = order;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::invalid_argument("field order must be a prime power");
  if (order > 256) throw std::invalid_argument("non-prime field order must be <= 256");

  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = build_tables(p, k);
  return Field(Kind::Finite, p, order, slot);
}

namespace {

std::shared_ptr<const Field::Tables> build_tables(std::uint32_t p, unsigned k) {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  Poly modulus;
  for (std::uint32_t low = 0; low < q; ++low) {
    modulus = digits(low, p, k);
    modulus.push_back(1);
    if (modulus[0] != 0 && is_irreducible(modulus, p)) break;
    modulus.clear();
  }
  if (modulus.empty()) throw std::logic_error("no irreducible polynomial found");

  auto t = std::make_shared<Field::Tables>();
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.resize(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = digits(a, p, k);
    Poly na(k);
    for (unsigned i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    t->neg[a] = static_cast<std::uint8_t>(encode(na, p));
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = digits(b, p, k);
      Poly sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      t->add[a * q + b] = static_cast<std::uint8_t>(encode(sum, p));
      const std::uint32_t prod = encode(mulmod(pa, pb, modulus, p), p);
      t->mul[a * q + b] = static_cast<std::uint8_t>(prod);
      if (prod == 1) t->inv[a] = static_cast<std::uint8_t>(b);
    }
  }
  return t;
}

}  // namespace

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits_part;
  if (text.starts_with("F_"))
    digits_part = text.substr(2);
  else if (text.starts_with("GF(") && text.ends_with(")"))
    digits_part = text.substr(3, text.size() - 4);
  else
    throw std::invalid_argument("unknown field: " + std::string(text));
  std::uint32_t q = 0;
  auto [ptr, ec] = std::from_chars(digits_part.data(), digits_part.data() + digits_part.size(), q);
  if (ec != std::errc() || ptr != digits_part.data() + digits_part.size())
    throw std::invalid_argument("unknown field: " + std::string(text));
  return finite(q);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(order_);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (tables_) return tables_->add[a * order_ + b];
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= order_ ? s - order_ : s);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (tables_) return tables_->mul[a * order_ + b];
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % order_);
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (tables_) return tables_->neg[a];
  return a == 0 ? 0 : order_ - a;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  if (tables_) return tables_->inv[a];
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = order_, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += order_;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t Field::reduce(long long n) const {
  const long long p = characteristic_;
  long long r = n % p;
  if (r < 0) r += p;
  // Prime subfield elements are encoded as the constant polynomial, i.e. the
  // residue itself, for both prime and prime-power fields.
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::reduce(const mpz_class& n) const {
  mpz_class r = n % characteristic_;
  if (r < 0) r += characteristic_;
  return static_cast<std::uint32_t>(r.get_ui());
}

Scalar Scalar::from_int(const Field& f, long long n) {
  if (f.is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(n))));
  return Scalar(f.reduce(n));
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad scalar: " + std::string(text));
  q.canonicalize();
  if (f.is_rational()) return Scalar(q);
  if (q.get_den() != 1) {
    const std::uint32_t den = f.reduce(q.get_den());
    if (den == 0) throw std::invalid_argument("denominator vanishes in " + f.name());
    return Scalar(f.mul(f.reduce(q.get_num()), f.inv(den)));
  }
  const mpz_class& num = q.get_num();
  if (f.is_prime_field() || num < 0) return Scalar(f.reduce(num));
  // Prime-power fields: nonnegative integers below q are element encodings.
  if (num >= f.order()) throw std::invalid_argument("residue out of range for " + f.name());
  return Scalar(static_cast<std::uint32_t>(num.get_ui()));
}

Scalar Field::plus(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(mpq_class(a.rational() + b.rational()));
  return Scalar(add(a.residue(), b.residue()));
}

Scalar Field::times(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(mpq_class(a.rational() * b.rational()));
  return Scalar(mul(a.residue(), b.residue()));
}

Scalar Field::negate(const Scalar& a) const {
  if (is_rational()) return Scalar(mpq_class(-a.rational()));
  return Scalar(neg(a.residue()));
}

Scalar Field::inverse(const Scalar& a) const {
  if (is_rational()) {
    if (sgn(a.rational()) == 0) throw std::domain_error("division by zero in Q");
    return Scalar(mpq_class(1 / a.rational()));
  }
  return Scalar(inv(a.residue()));
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<mpq_class>(&v_)) return sgn(*r) == 0;
  return std::get<std::uint32_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<mpq_class>(&v_)) return *r == 1;
  return std::get<std::uint32_t>(v_) == 1;
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<mpq_class>(&v_)) return r->get_str();
  return std::to_string(std::get<std::uint32_t>(v_));
}

}  // namespace quivemb
