#include "support.hpp"

#include "lieq/catalog.hpp"
#include "lieq/errors.hpp"
#include "lieq/io.hpp"
#include "lieq/random.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("rationals") {
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
  CHECK(rational_from_json(Json(4)) == 4);
  CHECK(to_json(rational_from_json(Json("2/4"))) == Json("1/2"));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
}

TEST_CASE("parse errors carry a location") {
  const Json doc = Json::parse(R"({"dim": 2, "basis": ["x", "y"],
    "brackets": [{"left": "x", "right": "y", "result": {"y": "1/0"}}]})");
  try {
    algebra_from_json(doc);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/brackets/0/result/y") != std::string::npos);
  }
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 3, "basis": ["x", "y"], "brackets": []})")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 2, "basis": ["x", "x"], "brackets": []})")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(
                      R"({"dim": 2, "basis": ["x", "y"], "brackets": [{"left": "x", "right": "w", "result": {}}]})")),
                  ParseError);
}

TEST_CASE("broken antisymmetry survives parsing") {
  const Json doc = Json::parse(R"({"dim": 2, "basis": ["x", "y"], "brackets": [
    {"left": "x", "right": "y", "result": {"y": "1"}},
    {"left": "y", "right": "x", "result": {"y": "1"}}]})");
  const LieAlgebra g = algebra_from_json(doc);
  const auto v = g.validate();
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::Antisymmetry);
  const LieAlgebra again = algebra_from_json(to_json(g));
  CHECK(again.validate());
}

TEST_CASE("algebra and form round trips") {
  for (const auto& e : catalog_all()) {
    CAPTURE(e.instance.name);
    const Json j = instance_to_json(e.instance);
    const Instance back = instance_from_json(Json::parse(j.dump()));
    CHECK(back.name == e.instance.name);
    CHECK(back.algebra == e.instance.algebra);
    CHECK(back.omega.has_value() == e.instance.omega.has_value());
    if (e.instance.omega) CHECK(back.omega->gram() == e.instance.omega->gram());
    if (e.instance.metric) CHECK(back.metric->gram() == e.instance.metric->gram());
    CHECK(back.h.has_value() == e.instance.h.has_value());
    if (e.instance.h) CHECK(back.h->j().matrix() == e.instance.h->j().matrix());
    CHECK(back.levi.has_value() == e.instance.levi.has_value());
    if (e.instance.levi) CHECK(back.levi->compact == e.instance.levi->compact);
    CHECK(instance_to_json(back) == j);
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = corpus_instance(seed, 8);
    CHECK(instance_to_json(instance_from_json(instance_to_json(inst))) == instance_to_json(inst));
  }
}

TEST_CASE("form and structure documents") {
  const BilinearForm w = skew(two_dim(), {{"x", "y", 1}});
  CHECK(to_json(w)["kind"] == "skew");
  CHECK(form_from_json(to_json(w)).gram() == w.gram());
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"kind": "skew", "gram": [["0", "1"], ["1", "0"]]})")),
                  ParseError);
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"kind": "alternating", "gram": [["0"]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1", "2"], ["3"]])")), ParseError);

  Json doc = instance_to_json(catalog_get("two-dim-solvable").instance);
  doc["forms"]["omega"]["gram"] = Json::parse(R"([["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]])");
  CHECK_THROWS_AS(instance_from_json(doc), DimensionMismatch);
}

TEST_CASE("verdict and report documents") {
  const InstanceAnalysis a = analyze_instance(catalog_get("Gn").instance);
  const Json v = to_json(*a.omega, a.instance.algebra);
  CHECK(v["invariant"] == false);
  CHECK(v["nilInvariant"] == true);
  CHECK(v["quasiInvariant"] == false);
  CHECK(v["mode"].is_string());
  CHECK(v["witnesses"].size() >= 1);

  const VerifierReport r = verify("nil_skew", a);
  const Json rj = to_json(r);
  CHECK(rj["theorem"] == "nil_skew");
  CHECK(rj["status"] == "pass");
  const std::string md = to_markdown(r);
  CHECK(md.find("nil_skew") != std::string::npos);
  CHECK(analysis_to_json(a).contains("profile"));
  CHECK_FALSE(analysis_to_markdown(a).empty());
}
