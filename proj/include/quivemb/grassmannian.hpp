#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quivemb/rep.hpp"

namespace quivemb {

// Thrown when a walk needs more echelon-pattern visits than allowed.
class BudgetExceeded : public std::length_error {
 public:
  BudgetExceeded(const std::string& what, mpz_class estimate)
      : std::length_error(what), estimate(std::move(estimate)) {}
  mpz_class estimate;  // product of per-vertex Gaussian binomials of the chosen plan
};

struct GrassmannianConfig {
  std::uint64_t budget = 10'000'000;
  // Allow working with Gr_{d-e} of the dual when that is cheaper.
  bool allow_dual = true;
};

// Subrepresentations of m (finite field) with dimension vector e, as per-vertex
// bases. Deterministic order.
std::vector<SubspaceFamily> enumerate(const Representation& m, const DimVector& e,
                                      const GrassmannianConfig& config = {});

mpz_class count(const Representation& m, const DimVector& e, const GrassmannianConfig& config = {});
mpz_class count_serial(const Representation& m, const DimVector& e, const GrassmannianConfig& config = {});

std::optional<SubspaceFamily> find_subrep(const Representation& m, const DimVector& e,
                                          const GrassmannianConfig& config = {});
bool nonempty(const Representation& m, const DimVector& e, const GrassmannianConfig& config = {});

// Gr of subrepresentations of codimension e, i.e. Gr_e(Dm) over the opposite
// quiver.
mpz_class count_codimension(const Representation& m, const DimVector& e, const GrassmannianConfig& config = {});

// Echelon-pattern estimate of the plan count() would use.
mpz_class enumeration_estimate(const Representation& m, const DimVector& e, bool allow_dual = true);

// Integer polynomial, coefficients lowest degree first.
struct Polynomial {
  std::vector<mpz_class> coeffs;

  long degree() const;
  mpz_class leading() const;
  mpz_class operator()(const mpz_class& x) const;
  std::string to_string() const;  // in the variable q
};

struct GrassmannianCount {
  DimVector e;
  std::vector<std::pair<std::uint32_t, mpz_class>> samples;
  std::optional<Polynomial> poly;
  std::string failure;  // set when no polynomial could be confirmed
};

// Counts Gr_e of m reduced to each F_q and fits a polynomial of minimal degree
// that also matches at least one further sample. Instances whose reduction
// changes dim End are rejected with std::invalid_argument.
GrassmannianCount counting_poly(const Representation& m_over_q, const DimVector& e,
                                const std::vector<std::uint32_t>& qs, const GrassmannianConfig& config = {});

// Lowest-degree interpolation with a held-out confirmation; nullopt when no
// degree below samples.size() - 1 with integer coefficients matches.
std::optional<Polynomial> fit_polynomial(const std::vector<std::pair<std::uint32_t, mpz_class>>& samples,
                                         long degree_cap);

std::string to_csv(const GrassmannianCount& c);

}  // namespace quivemb
