#include <coxeterlab/families.hpp>
#include <coxeterlab/json_io.hpp>

#include <doctest.h>

using namespace coxlab;

TEST_CASE("polynomial round trip") {
  IntPoly p{1, -3, 0, 7};
  json j = to_json(p);
  CHECK(j == json::array({"1", "-3", "0", "7"}));
  CHECK(poly_from_json(j) == p);
  // plain integers are accepted on input
  CHECK(poly_from_json(json::parse("[1, -3, 0, 7]")) == p);
  CHECK_THROWS_AS(poly_from_json(json::parse("{}")), std::invalid_argument);
}

TEST_CASE("factorization round trip") {
  CycFactorization f;
  f.factors = {{2, 2}, {30, 1}};
  f.residual = IntPoly{1, -3, 1};
  json j = to_json(f);
  CHECK(j["factors"]["2"] == 2);
  CHECK(factorization_from_json(j) == f);
}

TEST_CASE("algebra round trip") {
  auto a = extended_canonical({2, 3, 7});
  json j = to_json(a);
  auto b = cartan_from_json(j);
  CHECK(exact_equal(a.cartan(), b.cartan()));
  CHECK(a.labels() == b.labels());
  CHECK(a.provenance() == b.provenance());
  // and once more through text
  auto c = cartan_from_json(json::parse(j.dump()));
  CHECK(exact_equal(a.cartan(), c.cartan()));
}

TEST_CASE("spec parsing") {
  auto q = quiver_from_json(json::parse(
      R"({"vertices": ["a", "b", "c"], "arrows": [[0, 1], [0, 1], [1, 2]]})"));
  CHECK(q.size() == 3);
  CHECK(q.arrows.size() == 3);
  CHECK_THROWS(quiver_from_json(json::parse(R"({"vertices": ["a"], "arrows": [[0, 5]]})")));

  auto p = poset_from_json(json::parse(
      R"({"elements": ["x", "y"], "covers": [[0, 1]]})"));
  CHECK(p.size() == 2);

  auto g = action_from_json(json::parse(R"({"generators": [[1, 0]]})"));
  CHECK(g.generators == std::vector<std::vector<int>>{{1, 0}});
}

TEST_CASE("report serialization") {
  auto cm = coxeter_matrix(extended_canonical({3, 3, 3, 3}));
  json per = to_json(periodicity(cm));
  CHECK(per["cyclotomic"] == true);
  CHECK(per["diagonalizable"] == false);
  CHECK(per["period"] == "infinity");

  json per42 = to_json(periodicity(coxeter_matrix(extended_canonical({2, 3, 7}))));
  CHECK(per42["period"] == 42);

  json hf = to_json(homological_form(dynkin('A', 3)));
  CHECK(hf["hform"] == "positive");
  CHECK(hf["radical_rank"] == 0);

  json sm = to_json(measures(coxeter_matrix(dynkin('E', 8)), 1e-10));
  CHECK(sm["certified_cyclotomic"] == true);
  CHECK(sm["mahler"] == "1");
  CHECK(sm["energy"] == "8");
}
