#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dgorbit.hpp"
#include "jsonio.hpp"

using namespace orbitk;
using nlohmann::json;

TEST_CASE("integer matrices serialize as decimal strings") {
  auto m = exactla::IntMatrix::from_rows({{-2, 1}, {-1, -1}});
  json j = jsonio::matrix_to_json(m);
  CHECK(j.dump() == "[[\"-2\",\"1\"],[\"-1\",\"-1\"]]");
  CHECK(jsonio::matrix_from_json(j) == m);
  // parsing accepts plain integers too
  CHECK(jsonio::matrix_from_json(json::parse("[[-2,1],[-1,-1]]")) == m);
  // huge entries survive the round trip
  json big = json::parse("[[\"123456789012345678901234567890\"]]");
  auto bm = jsonio::matrix_from_json(big);
  CHECK(jsonio::matrix_to_json(bm) == big);
  CHECK_THROWS_AS(jsonio::matrix_from_json(json::parse("[[1],[2,3]]")),
                  orbitk::Error);
}

TEST_CASE("rational matrices and vectors") {
  auto m = jsonio::rational_matrix_from_json(json::parse("[[\"3/2\",1],[0,\"-1\"]]"));
  CHECK(m.at(0, 0) == mpq_class(3, 2));
  CHECK(jsonio::rational_matrix_to_json(m).dump() ==
        "[[\"3/2\",\"1\"],[\"0\",\"-1\"]]");
  auto v = jsonio::int_vector_from_csv("2, 0,-1");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == -1);
  CHECK_THROWS_AS(jsonio::int_vector_from_csv("1,,2"), orbitk::Error);
}

TEST_CASE("group serialization") {
  auto g = abgroup::FgAbGroup::from_factors(1, {mpz_class(4)});
  CHECK(jsonio::group_to_json(g).dump() == "{\"rank\":1,\"torsion\":[\"4\"]}");
  CHECK(jsonio::group_from_json(json::parse("{\"rank\":1,\"torsion\":[4]}")) == g);
  // non-canonical torsion lists canonicalize on the way in
  CHECK(jsonio::group_from_json(json::parse("{\"rank\":0,\"torsion\":[4,2]}"))
            .render() == "Z/2 (+) Z/4");
}

TEST_CASE("quiver serialization") {
  auto q = jsonio::quiver_from_json(json::parse(
      R"({"vertices": ["1","2"], "arrows": [["1","2"],["1","2"],["1","2"]]})"));
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrows().size() == 3);
  auto round = jsonio::quiver_to_json(q);
  CHECK(round["arrows"].size() == 3);
  CHECK_THROWS_AS(
      jsonio::quiver_from_json(json::parse(R"({"vertices": ["1"]})")),
      orbitk::Error);
}

TEST_CASE("invariant specs parse with flags and both coefficient kinds") {
  auto spec = jsonio::invariant_spec_from_json(json::parse(R"({
    "flags": {"connective": true},
    "degrees": {
      "0": {"group": {"rank": 2, "torsion": []}, "auto": [["0","1"],["1","0"]]},
      "1": {"group": {"rank": 0, "torsion": ["6"]}, "auto": [["5"]]}
    }})"));
  CHECK(spec.flags().connective);
  CHECK(spec.degrees().size() == 2);
  auto rs = orbit::orbit_groups(spec);
  CHECK(rs.size() == 3);

  auto fspec = jsonio::invariant_spec_from_json(json::parse(R"({
    "flags": {"two_periodic": true, "field_coefficients": true, "p": 7},
    "degrees": {
      "0": {"group": {"dim": 2}, "auto": [["1","3"],["0","1"]]},
      "1": {"group": {"dim": 1}, "auto": [["6"]]}
    }})"));
  CHECK(fspec.flags().prime == 7);
  auto frs = orbit::orbit_groups(fspec);
  REQUIRE(frs.size() == 2);
  // (auto - id) in degree 0 has rank 1 over F_7
  CHECK(frs[0].coker_piece.rank() == 1);

  CHECK_THROWS_AS(jsonio::invariant_spec_from_json(json::parse(R"({
    "degrees": {"0": {"group": {"rank": 1}, "auto": [["2"]]}}})")),
                  orbitk::Error);  // non-invertible auto
}

TEST_CASE("cohomology model schema round trip") {
  auto model = mukai::p1_model(3);
  json j = jsonio::cohomology_model_to_json(model);
  auto back = jsonio::cohomology_model_from_json(j);
  CHECK(back.dim() == 2);
  auto [even, odd] = mukai::line_bundle_hp_map(back, 0);
  CHECK(even.at(1, 0) == 3);
  // sparse hand-written model
  auto hand = jsonio::cohomology_model_from_json(json::parse(R"({
    "basis": [{"name": "1", "degree": 0}, {"name": "h", "degree": 2}],
    "mult": {"1|1": {"1": 1}, "1|h": {"h": 1}, "h|1": {"h": 1}},
    "pairing": [[0, -1], [-1, 0]],
    "classes": {"ch_L": {"1": 1, "h": "5"}}
  })"));
  auto [e2, o2] = mukai::line_bundle_hp_map(hand, 0);
  CHECK(e2.at(1, 0) == 5);
}

TEST_CASE("dg category schema") {
  auto cat = jsonio::dg_category_from_json(json::parse(R"({
    "field": "F5",
    "objects": ["pt"],
    "homs": {"pt|pt": {"dims": {"0": 1, "1": 1}, "diff": {"0": [["0"]]}}},
    "comp": {"pt|pt|pt": [
      {"gdeg": 0, "fdeg": 0, "tensor": [[["1"]]]},
      {"gdeg": 0, "fdeg": 1, "tensor": [[["1"]]]},
      {"gdeg": 1, "fdeg": 0, "tensor": [[["1"]]]}
    ]},
    "units": {"pt": ["1"]}
  })"));
  CHECK(cat.coeffs().p == 5);
  CHECK_NOTHROW(cat.validate());
  auto orb = dg::orbit_n(cat, dg::DgFunctor::identity(cat), 2);
  CHECK(orb.cat.hom(0, 0).dim(0) == 3);

  auto f = jsonio::dg_functor_from_json(
      cat, json::parse(
               R"({"objects": {"pt": "pt"},
                   "maps": {"pt|pt": {"0": [["1"]], "1": [["1"]]}}})"));
  CHECK_NOTHROW(dg::validate_functor(cat, f));
  CHECK_THROWS_AS(jsonio::dg_category_from_json(json::parse(R"({
    "field": "F1", "objects": []})")),
                  orbitk::Error);
}
