#include "doctest.h"

#include "oracles.hpp"
#include "quivemb/dynkin.hpp"
#include "quivemb/fixtures.hpp"
#include "quivemb/search.hpp"

using namespace quivemb;
using oracle::interval;

namespace {

// Tits form through the symmetrised Cartan matrix 2I - (A + A^T).
long tits(const Quiver& q, const std::vector<long>& d) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& a : q.arrows()) {
    --c[a.source][a.target];
    --c[a.target][a.source];
  }
  long s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += d[i] * c[i][j] * d[j];
  return s / 2;
}

std::size_t brute_root_count(const Quiver& q, long bound) {
  std::size_t count = 0;
  for (const auto& d : sub_dim_vectors(DimVector(std::vector<long>(q.vertex_count(), bound))))
    count += !d.is_zero() && tits(q, d.coords()) == 1;
  return count;
}

const IndecomposableTable& table_for(const Quiver& q, const Field& f) {
  static std::vector<std::unique_ptr<IndecomposableTable>> cache;
  for (const auto& t : cache)
    if (t->quiver == q && t->field == f) return *t;
  cache.push_back(std::make_unique<IndecomposableTable>(IndecomposableTable::build(q, f)));
  return *cache.back();
}

}  // namespace

TEST_CASE("positive roots") {
  const auto a2 = positive_roots(Quiver::equioriented_a(2));
  CHECK(a2 == std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
  const Quiver a3 = Quiver::equioriented_a(3);
  CHECK(positive_roots(a3).size() == 6);
  CHECK(brute_root_count(a3, 3) == 6);
  const auto d4 = positive_roots(fixtures::d4());
  CHECK(d4.size() == 12);
  CHECK(brute_root_count(fixtures::d4(), 3) == 12);
  CHECK(std::find(d4.begin(), d4.end(), DimVector{2, 1, 1, 1}) != d4.end());
  for (std::size_t n = 1; n <= 6; ++n) CHECK(positive_roots(Quiver::equioriented_a(n)).size() == n * (n + 1) / 2);
  // Orientation does not matter.
  CHECK(positive_roots(Quiver(3, {{1, 0}, {1, 2}})).size() == 6);
  CHECK(positive_roots(Quiver(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}})).size() == 36);
  CHECK(positive_roots(Quiver(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}})).size() == 63);
  CHECK(positive_roots(Quiver(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}})).size() == 120);
  CHECK_THROWS(positive_roots(Quiver::kronecker(2)));
}

TEST_CASE("certified indecomposables") {
  for (const Field& f : {Field::rationals(), Field::finite(2), Field::finite(3), Field::finite(4), Field::finite(5)}) {
    const Quiver a3 = Quiver::equioriented_a(3);
    CHECK(indecomposable(a3, {0, 1, 0}, f) == Representation::simple(a3, f, 1));
    const auto u13 = indecomposable(a3, {1, 1, 1}, f);
    CHECK(rank(u13.arrow(0)) == 1);
    CHECK(rank(u13.arrow(1)) == 1);
    CHECK(hom_dim(u13, u13) == 1);
    const auto x = indecomposable(fixtures::d4(), {2, 1, 1, 1}, f);
    CHECK(hom_dim(x, x) == 1);
    CHECK(hom_dim(build_projective(fixtures::d4(), f, 0), x) == 2);
    CHECK(hom_dim(fixtures::d4_x(f), fixtures::d4_x(f)) == 1);
  }
  CHECK_THROWS(indecomposable(Quiver::equioriented_a(2), {1, 2}, Field::rationals()));
}

TEST_CASE("indecomposable tables") {
  for (const Field& f : {Field::rationals(), Field::finite(2), Field::finite(5)}) {
    for (const Quiver& q : {Quiver::equioriented_a(3), fixtures::d4(), Quiver(3, {{1, 0}, {1, 2}})}) {
      const auto& t = table_for(q, f);
      CHECK_NOTHROW(t.validate());
      std::size_t proj = 0, inj = 0;
      for (std::size_t u = 0; u < t.size(); ++u) {
        CHECK(t.hom[u][u] == 1);
        proj += t.projective[u];
        inj += t.injective[u];
      }
      CHECK(proj == q.vertex_count());
      CHECK(inj == q.vertex_count());
    }
  }
}

TEST_CASE("decomposition recovers multiplicities") {
  const Field F5 = Field::finite(5);
  const auto& t = table_for(Quiver::equioriented_a(3), F5);
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto m = decompose(t.reps[k], t);
    std::vector<long> unit(t.size(), 0);
    unit[k] = 1;
    CHECK(m == unit);
  }
  const Representation parts[] = {interval(3, 1, 2, F5), interval(3, 2, 3, F5), interval(3, 2, 3, F5)};
  const auto m = decompose(direct_sum(parts), t);
  CHECK(m[*t.index_of({1, 1, 0})] == 1);
  CHECK(m[*t.index_of({0, 1, 1})] == 2);
  CHECK(std::accumulate(m.begin(), m.end(), 0L) == 3);

  Rng rng(3);
  for (const Field& f : {F5, Field::finite(2), Field::rationals()})
    for (const Quiver& q : {Quiver::equioriented_a(3), fixtures::d4()}) {
      const auto& tab = table_for(q, f);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<long> mult(tab.size());
        for (auto& c : mult) c = static_cast<long>(rng() % 4) * (rng() % 3 == 0);
        const auto x = oracle::scramble(assemble(tab, mult), rng());
        CHECK(decompose(x, tab) == mult);
        const auto iso = decomposition_isomorphism(x, tab, mult);
        CHECK(is_injective(iso));
        CHECK(is_surjective(iso));
        CHECK_NOTHROW(Morphism(iso.source(), x, iso.vertex_mats()));
      }
    }
}

TEST_CASE("canonical decompositions") {
  const Field Q = Field::rationals();
  const auto& a2 = table_for(Quiver::equioriented_a(2), Q);
  auto m = canonical_decomposition({1, 2}, a2);
  CHECK(m[*a2.index_of({1, 1})] == 1);
  CHECK(m[*a2.index_of({0, 1})] == 1);
  CHECK(m[*a2.index_of({1, 0})] == 0);
  CHECK(canonical_decomposition({0, 0}, a2) == std::vector<long>(3, 0));

  const auto& a3 = table_for(Quiver::equioriented_a(3), Q);
  for (std::size_t u = 0; u < a3.size(); ++u) {
    std::vector<long> unit(a3.size(), 0);
    unit[u] = 1;
    CHECK(canonical_decomposition(a3.roots[u], a3) == unit);
  }
  for (const auto& e : sub_dim_vectors({3, 3, 3})) {
    const auto mult = canonical_decomposition(e, a3);
    DimVector total = DimVector::zero(3);
    for (std::size_t u = 0; u < a3.size(); ++u) total = total + a3.roots[u] * mult[u];
    CHECK(total == e);
    const auto g = generic_rep(e, a3);
    CHECK(ext_dim(g, g) == 0);
    CHECK(decompose(g, a3) == mult);
  }
}

TEST_CASE("generic embeddings") {
  const Field Q = Field::rationals();
  const auto& a2 = table_for(Quiver::equioriented_a(2), Q);
  CHECK(check_generic_embedding({0, 0}, {1, 1}, a2));
  CHECK(check_generic_embedding({1, 1}, {1, 1}, a2));
  CHECK(check_generic_embedding({0, 1}, {1, 1}, a2));
  CHECK_FALSE(check_generic_embedding({1, 0}, {1, 1}, a2));
  CHECK_THROWS(check_generic_embedding({2, 0}, {1, 1}, a2));

  for (const Field& f : {Field::finite(3), Field::finite(5), Q}) {
    const auto& t = table_for(Quiver::equioriented_a(3), f);
    for (const auto& d : sub_dim_vectors({2, 2, 2}))
      for (const auto& e : sub_dim_vectors(d)) {
        const bool holds = check_generic_embedding(e, d, t);
        const auto gd = generic_rep(d, t), ge = generic_rep(e, t);
        CHECK(holds == (ext_dim(ge, generic_rep(d - e, t)) == 0));
        const auto witness = find_generic_embedding(e, d, t);
        if (holds) {
          REQUIRE(witness);
          CHECK(is_injective(*witness));
        } else if (f.is_finite()) {
          CHECK_FALSE(witness);  // exhaustive over F_q
        }
      }
  }
}
