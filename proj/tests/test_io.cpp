#include "doctest.h"

#include "oracles.hpp"
#include "quivemb/criteria.hpp"
#include "quivemb/fixtures.hpp"
#include "quivemb/io.hpp"

using namespace quivemb;
using io::json;

TEST_CASE("quiver and representation round trips") {
  const Quiver q = fixtures::d4();
  CHECK(io::quiver_from_json(io::to_json(q)) == q);
  CHECK(io::quiver_from_json(io::to_json(q)).labels() == q.labels());
  const json byindex = {{"vertices", {"a", "b"}}, {"arrows", {{0, 1}, {0, 1}}}};
  CHECK(io::quiver_from_json(byindex) == Quiver::kronecker(2));

  for (const Field& f : {Field::rationals(), Field::finite(4), Field::finite(7)}) {
    const auto x = random_representation(q, {2, 1, 2, 1}, f, 5);
    CHECK(io::rep_from_json(io::to_json(x)) == x);
    CHECK(io::rep_from_json(json::parse(io::to_json(x).dump())) == x);
  }
  Matrix half(Field::rationals(), 1, 1);
  half.set(0, 0, Scalar(mpq_class(-3, 2)));
  const Representation a2(Quiver::equioriented_a(2), Field::rationals(), {1, 1}, {half});
  const json j = io::to_json(a2);
  CHECK(j["matrices"][0][0][0] == "-3/2");
  CHECK(j["field"] == "Q");
  CHECK(io::rep_from_json(j) == a2);

  const Morphism g = fixtures::kronecker_g(Field::rationals());
  const Morphism back = io::morphism_from_json(io::to_json(g));
  CHECK(back.vertex_mats() == g.vertex_mats());
}

TEST_CASE("malformed input") {
  const auto x = oracle::interval(2, 1, 2, Field::finite(3));
  json j = io::to_json(x);
  json bad = j;
  bad["matrices"] = json::array();
  CHECK_THROWS_AS(io::rep_from_json(bad), io::InputError);
  bad = j;
  bad["dims"] = {1, 1, 1};
  CHECK_THROWS_AS(io::rep_from_json(bad), io::InputError);
  bad = j;
  bad["field"] = "F_6";
  CHECK_THROWS_AS(io::rep_from_json(bad), io::InputError);
  bad = j;
  bad["matrices"][0][0][0] = 1.5;
  CHECK_THROWS_AS(io::rep_from_json(bad), io::InputError);
  bad = j;
  bad["quiver"]["arrows"] = {{"1", "9"}};
  CHECK_THROWS_AS(io::rep_from_json(bad), io::InputError);
  bad = j;
  bad.erase("quiver");
  CHECK_THROWS_AS(io::rep_from_json(bad), io::InputError);

  // A non-intertwining morphism is rejected.
  json m = io::to_json(Morphism::identity(x));
  m["matrices"][0] = {{0}};
  CHECK_THROWS_AS(io::morphism_from_json(m), io::InputError);

  CHECK(io::parse_dims("1,0,2", 3) == DimVector{1, 0, 2});
  CHECK_THROWS_AS(io::parse_dims("1,0", 3), io::InputError);
  CHECK_THROWS_AS(io::parse_dims("1,x,0", 3), io::InputError);
  CHECK_THROWS_AS(io::parse_dims("1,-1,0", 3), io::InputError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), io::InputError);
}

TEST_CASE("tables and verdicts") {
  const Field f3 = Field::finite(3);
  const Quiver a3 = Quiver::equioriented_a(3);
  const auto t = IndecomposableTable::build(a3, f3);
  const auto back = io::table_from_json(io::to_json(t));
  CHECK(back.roots == t.roots);
  CHECK(back.hom == t.hom);
  CHECK(back.projective == t.projective);
  json broken = io::to_json(t);
  broken["hom"][0][0] = 2;
  CHECK_THROWS_AS(io::table_from_json(broken), io::InputError);
  broken = io::to_json(t);
  broken["reps"][5] = io::to_json(direct_sum(std::vector<Representation>{
      oracle::interval(3, 1, 1, f3), oracle::interval(3, 2, 3, f3)}));
  CHECK_THROWS_AS(io::table_from_json(broken), io::InputError);

  const auto s1 = Representation::simple(a3, f3, 0);
  const Verdict v = check_grassmannian_nonempty(s1, {0, 0, 1}, t);
  const json j = io::to_json(v, a3);
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["type"] == "indecomposable");
  CHECK(j["ledger"].size() == t.size());
  // Recomputing gives the same document.
  CHECK(j == io::to_json(check_grassmannian_nonempty(io::rep_from_json(io::to_json(s1)), {0, 0, 1}, t), a3));
  for (const auto& entry : j["ledger"]) {
    const long lhs = entry["lhs"], rhs = entry["rhs"];
    CHECK(entry["holds"] == (lhs >= rhs));
  }

  const auto u12 = oracle::interval(2, 1, 2, Field::finite(2));
  const Representation parts[] = {oracle::interval(2, 1, 1, Field::finite(2)), oracle::interval(2, 2, 2, Field::finite(2))};
  const json q = io::to_json(check_nc2(u12, direct_sum(parts)), u12.quiver());
  CHECK(q["witness"]["type"] == "quotient");
  CHECK(q["witness"]["vertex"] == "2");
  CHECK(q["witness"]["brackets"].size() == 4);
}
