#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace quivemb {

class Scalar;

// Exact ground field: the rationals, a prime field F_p (p < 2^31), or a small
// Galois field F_{p^k} (q <= 256) built from the lexicographically smallest
// monic irreducible polynomial of degree k over F_p.
//
// Finite-field elements are carried as integers 0..q-1. For prime fields these
// are the canonical residues; for F_{p^k} they are base-p digit encodings of
// the polynomial coefficients (lowest degree first).
class Field {
 public:
  enum class Kind { Rationals, Finite };

  static Field rationals();
  static Field finite(std::uint32_t order);
  // "Q", "F_5", "F_4", "GF(4)"
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_prime_field() const { return is_finite() && order_ == characteristic_; }
  std::uint32_t characteristic() const { return characteristic_; }
  // 0 for the rationals.
  std::uint32_t order() const { return order_; }
  std::string name() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  // Image of an integer under Z -> F_q (lands in the prime subfield).
  std::uint32_t reduce(long long n) const;
  std::uint32_t reduce(const mpz_class& n) const;

  Scalar plus(const Scalar& a, const Scalar& b) const;
  Scalar times(const Scalar& a, const Scalar& b) const;
  Scalar negate(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_;
  }

  // Addition/multiplication tables of a non-prime finite field.
  struct Tables {
    std::vector<std::uint8_t> add, mul, neg, inv;
  };

 private:
  Field(Kind kind, std::uint32_t characteristic, std::uint32_t order,
        std::shared_ptr<const Tables> tables)
      : kind_(kind), characteristic_(characteristic), order_(order),
        tables_(std::move(tables)) {}

  Kind kind_;
  std::uint32_t characteristic_;
  std::uint32_t order_;
  std::shared_ptr<const Tables> tables_;  // only for non-prime finite fields
};

// Scalar value detached from its field. Finite-field values are residues
// (see Field); rationals are kept canonical by GMP.
class Scalar {
 public:
  Scalar() : v_(std::uint32_t{0}) {}
  explicit Scalar(std::uint32_t residue) : v_(residue) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  static Scalar from_int(const Field& f, long long n);
  // "p/q", "p", or a residue for finite fields.
  static Scalar parse(const Field& f, std::string_view text);

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
  bool is_zero() const;
  bool is_one() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  std::variant<std::uint32_t, mpq_class> v_;
};

bool is_prime(std::uint64_t n);

}  // namespace quivemb
