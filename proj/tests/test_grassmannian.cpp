#include "doctest.h"

#include "oracles.hpp"
#include "quivemb/fixtures.hpp"
#include "quivemb/grassmannian.hpp"
#include "quivemb/subspace.hpp"

using namespace quivemb;
using oracle::interval;

namespace {

DimVector random_dims(Rng& rng, std::size_t n, long max) {
  std::vector<long> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(static_cast<long>(rng() % (max + 1)));
  return DimVector(c);
}

std::vector<Quiver> quivers() {
  return {Quiver::equioriented_a(3), Quiver(3, {{1, 0}, {1, 2}}), fixtures::d4(), Quiver::kronecker(2),
          Quiver(1, {})};
}

}  // namespace

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 5) == 31);
  CHECK(gaussian_binomial(3, 0, 7) == 1);
  CHECK(gaussian_binomial(2, 3, 2) == 0);
  const Field F3 = Field::finite(3);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t c = 0;
      for_each_subspace(F3, n, k, [&](const Matrix& b) {
        CHECK(rank(b) == k);
        ++c;
        return true;
      });
      CHECK(mpz_class(static_cast<unsigned long>(c)) == gaussian_binomial(n, k, 3));
      CHECK(oracle::all_subspaces(F3, n).size() > 0);
    }
}

TEST_CASE("small Grassmannians") {
  const Field F2 = Field::finite(2);
  const auto u = interval(2, 1, 2, F2);
  CHECK(count(u, {0, 0}) == 1);
  CHECK(count(u, {1, 1}) == 1);
  CHECK(count(u, {0, 1}) == 1);
  CHECK(count(u, {1, 0}) == 0);
  CHECK(count(u, {2, 0}) == 0);
  CHECK_FALSE(nonempty(Representation::simple(Quiver::equioriented_a(2), F2, 0), {0, 1}));
  CHECK(nonempty(Representation::simple(Quiver::equioriented_a(2), F2, 0), {0, 0}));
  CHECK_THROWS(count(interval(2, 1, 2, Field::rationals()), {0, 1}));
}

TEST_CASE("walk agrees with brute-force subspace tuples") {
  Rng rng(12);
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::finite(q);
    for (const auto& quiv : quivers())
      for (int t = 0; t < 6; ++t) {
        const auto m = random_representation(quiv, random_dims(rng, quiv.vertex_count(), q == 2 ? 3 : 2), f, rng());
        std::map<DimVector, std::size_t> brute;
        oracle::for_each_subrep(m, [&](const std::vector<long>& d) { ++brute[DimVector(d)]; });
        for (const auto& e : sub_dim_vectors(m.dims())) {
          const mpz_class c = count(m, e);
          CHECK(c == static_cast<unsigned long>(brute[e]));
          CHECK(count_serial(m, e) == c);
          CHECK(count(m, e, {10'000'000, false}) == c);
          CHECK(count_codimension(m, m.dims() - e) == c);
          const auto list = enumerate(m, e);
          CHECK(mpz_class(static_cast<unsigned long>(list.size())) == c);
          std::set<std::vector<std::string>> keys;
          for (const auto& s : list) {
            CHECK(is_arrow_stable(m, s));
            std::vector<std::string> key;
            for (std::size_t v = 0; v < s.size(); ++v) {
              CHECK(static_cast<long>(rank(s[v])) == e[v]);
              key.push_back(canonical_basis(s[v]).to_string());
            }
            keys.insert(key);
          }
          CHECK(keys.size() == list.size());
          CHECK(nonempty(m, e) == (c > 0));
          if (auto s = find_subrep(m, e)) CHECK(is_arrow_stable(m, *s));
        }
      }
  }
}

TEST_CASE("budget is enforced") {
  const Field F2 = Field::finite(2);
  const auto m = random_representation(Quiver::equioriented_a(2), {6, 6}, F2, 1);
  CHECK_THROWS_AS(count(m, {3, 3}, {50, true}), BudgetExceeded);
}

TEST_CASE("counting polynomials") {
  const Field Q = Field::rationals();
  const Quiver point(1, {});
  const Representation line(point, Q, {2}, {});
  const auto c = counting_poly(line, {1}, {2, 3, 5});
  REQUIRE(c.poly);
  CHECK(c.poly->to_string() == "q + 1");

  const auto u = interval(2, 1, 2, Q);
  const auto u2 = power(u, 2);
  const auto c2 = counting_poly(u2, {1, 1}, {2, 3, 5});
  REQUIRE(c2.poly);
  CHECK(c2.poly->degree() == euler_form(u2.quiver(), {1, 1}, {1, 1}));
  CHECK(c2.poly->degree() == 1);

  // Too few samples to confirm a quadratic.
  const Representation plane(point, Q, {4}, {});
  const auto c3 = counting_poly(plane, {1}, {2, 3, 5});
  CHECK_FALSE(c3.poly);
  CHECK_FALSE(c3.failure.empty());
  const auto c4 = counting_poly(plane, {1}, {2, 3, 4, 5, 7});
  REQUIRE(c4.poly);
  CHECK(c4.poly->to_string() == "q^3 + q^2 + q + 1");
  CHECK(to_csv(c4).find("7,400") != std::string::npos);
}

TEST_CASE("Dynkin nonemptiness does not depend on the field") {
  Rng rng(31);
  const Field Q = Field::rationals();
  for (const Quiver& quiv : {Quiver::equioriented_a(3), fixtures::d4()})
    for (int t = 0; t < 6; ++t) {
      const auto m = random_representation(quiv, random_dims(rng, quiv.vertex_count(), 2), Q, rng(), 1);
      const auto m2 = m.reduced_to(Field::finite(2)), m3 = m.reduced_to(Field::finite(3));
      if (hom_dim(m2, m2) != hom_dim(m, m) || hom_dim(m3, m3) != hom_dim(m, m)) continue;
      for (const auto& e : sub_dim_vectors(m.dims())) CHECK(nonempty(m2, e) == nonempty(m3, e));
    }
}
