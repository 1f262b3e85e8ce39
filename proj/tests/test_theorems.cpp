#include "support.hpp"

#include "lieq/catalog.hpp"
#include "lieq/errors.hpp"
#include "lieq/random.hpp"
#include "lieq/theorems.hpp"

#include <doctest.h>

#include <algorithm>

using namespace testing;

namespace {

InstanceAnalysis catalog_analysis(const std::string& name, const std::map<std::string, int>& params = {}) {
  return analyze_instance(catalog_get(name, params).instance);
}

InstanceAnalysis with_omega(const LieAlgebra& g, const BilinearForm& w) {
  Instance inst;
  inst.name = "test";
  inst.algebra = g;
  inst.omega = w;
  return analyze_instance(inst);
}

bool failed_hypothesis(const VerifierReport& r, const std::string& label) {
  return std::any_of(r.hypotheses.begin(), r.hypotheses.end(),
                     [&](const Claim& c) { return !c.holds && c.label == label; });
}

bool all_conclusions_hold(const VerifierReport& r) {
  return std::all_of(r.conclusions.begin(), r.conclusions.end(), [](const Claim& c) { return c.holds; });
}

} // namespace

TEST_CASE("registry") {
  CHECK(theorems().size() == 16);
  CHECK(std::count_if(theorems().begin(), theorems().end(), [](const TheoremInfo& t) { return t.primary; }) == 8);
  CHECK(find_theorem("nil_skew").primary);
  CHECK_THROWS_AS(find_theorem("no_such_theorem"), UnknownTheorem);
  CHECK(to_string(ReportStatus::HypothesisNotMet) == "hypothesis-not-met");
}

TEST_CASE("nil-invariant skew forms") {
  const VerifierReport g1r = verify_nil_skew(with_omega(g1(), skew(g1(), {{"a", "z", 1}, {"x", "y", 1}})));
  CHECK(g1r.status() == ReportStatus::Pass);
  CHECK(g1r.conclusions.size() >= 3);
  CHECK(verify_nil_skew(catalog_analysis("abelian-torus", {{"p", 1}, {"q", 1}})).status() == ReportStatus::Pass);

  // No skew form on the Heisenberg algebra is both effective and nil-invariant.
  const LieAlgebra h = heisenberg1();
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const VerifierReport r = verify_nil_skew(with_omega(h, random_form(h, FormKind::Skew, seed)));
    CAPTURE(seed);
    CHECK(r.status() == ReportStatus::HypothesisNotMet);
    CHECK(r.conclusions.empty());
  }
}

TEST_CASE("quasi-invariant skew forms on K x R") {
  const VerifierReport su = verify_skew_solvable(catalog_analysis("su2-times-abelian", {{"d", 2}}));
  CHECK(su.status() == ReportStatus::Pass);

  const InstanceAnalysis osc = catalog_analysis("oscillator", {{"n", 2}});
  CHECK(verify_skew_solvable(osc).status() == ReportStatus::Pass);
  for (std::size_t i = 0; i < osc.instance.algebra.dim(); ++i) {
    CHECK(ad_jordan_parts(osc.instance.algebra, osc.instance.algebra.basis_vector(i)).real_split.is_zero());
  }

  const VerifierReport t = verify_skew_solvable(catalog_analysis("two-dim-solvable"));
  CHECK(t.status() == ReportStatus::HypothesisNotMet);
  CHECK(failed_hypothesis(t, "omega is quasi-invariant"));
  CHECK(t.conclusions.empty());
}

TEST_CASE("solvable quasi-invariant symplectic algebras") {
  const LieAlgebra plane = LieAlgebra::abelian(2);
  CHECK(verify_quasi_solv_abelian(with_omega(plane, skew(plane, {{"e1", "e2", 1}}))).status() == ReportStatus::Pass);
  const VerifierReport g = verify_quasi_solv_abelian(with_omega(g1(), skew(g1(), {{"a", "z", 1}, {"x", "y", 1}})));
  CHECK(g.status() == ReportStatus::HypothesisNotMet);
  CHECK(failed_hypothesis(g, "omega is quasi-invariant"));

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const LieAlgebra s = random_algebra({AlgebraClass::Solvable, 2 + 2 * (seed % 3), seed}).algebra;
    FormOptions opts;
    opts.nondegenerate = true;
    BilinearForm w;
    try {
      w = random_form(s, FormKind::Skew, seed, opts);
    } catch (const GenerationFailed&) {
      continue;
    }
    const VerifierReport r = verify_quasi_solv_abelian(with_omega(s, w));
    CAPTURE(seed);
    if (r.hypotheses_met()) CHECK(s.is_abelian());
  }
}

TEST_CASE("nil-invariant h-structures") {
  CHECK(verify_radical_nilpotent(catalog_analysis("abelian-torus", {{"p", 0}, {"q", 2}})).status() == ReportStatus::Pass);
  CHECK(verify_radical_nilpotent(catalog_analysis("u2-hopf")).status() == ReportStatus::Pass);
  CHECK(verify_radical_nilpotent(catalog_analysis("su2-power", {{"k", 2}})).status() == ReportStatus::Pass);
  const VerifierReport t = verify_radical_nilpotent(catalog_analysis("two-dim-solvable"));
  CHECK(t.status() == ReportStatus::HypothesisNotMet);
  CHECK(std::any_of(t.hypotheses.begin(), t.hypotheses.end(), [](const Claim& c) { return !c.holds; }));
}

TEST_CASE("closed nil-invariant forms") {
  CHECK(verify_symplectic_structure(catalog_analysis("abelian-torus")).status() == ReportStatus::Pass);
  const VerifierReport su = verify_symplectic_structure(catalog_analysis("su2-times-abelian", {{"d", 2}}));
  CHECK(su.status() == ReportStatus::Pass);
  const auto direct = std::find_if(su.conclusions.begin(), su.conclusions.end(),
                                   [](const Claim& c) { return c.label == "[K,R] = 0" && c.holds; });
  CHECK(direct != su.conclusions.end());

  const VerifierReport gn = verify_symplectic_structure(catalog_analysis("Gn"));
  CHECK(gn.status() == ReportStatus::HypothesisNotMet);
  REQUIRE(failed_hypothesis(gn, "omega is closed"));
  const auto closed = std::find_if(gn.hypotheses.begin(), gn.hypotheses.end(),
                                   [](const Claim& c) { return c.label == "omega is closed"; });
  CHECK(closed->witness.find("cyclic sum") != std::string::npos);
}

TEST_CASE("closed form with a nil-invariant metric") {
  const InstanceAnalysis dp = catalog_analysis("dual-pairing");
  CHECK(verify_metric_symplectic(dp).status() == ReportStatus::Pass);
  const LieAlgebra& g = dp.instance.algebra;
  const Subspace k = span(g, {"e11", "e12", "e13"});
  const Subspace r = span(g, {"r1", "r2"});
  CHECK_FALSE(orthogonal(*dp.instance.metric, k, r));
  CHECK(orthogonal(*dp.instance.omega, k, r));
  CHECK(verify_metric_symplectic(catalog_analysis("abelian-torus", {{"p", 2}, {"q", 0}})).status() == ReportStatus::Pass);
}

TEST_CASE("orthogonality in pseudo-Kaehler models") {
  CHECK(verify_pk_orthogonality(catalog_analysis("su2-times-abelian", {{"d", 2}})).status() == ReportStatus::Pass);
  const VerifierReport two = verify_pk_orthogonality(catalog_analysis("su2-power", {{"k", 2}}));
  CHECK(two.status() == ReportStatus::Pass);
  CHECK(std::any_of(two.conclusions.begin(), two.conclusions.end(), [](const Claim& c) {
    return c.label == "simple ideals of K mutually orthogonal under the metric" && c.holds;
  }));

  const VerifierReport bad = verify_pk_orthogonality(catalog_analysis("u2-hopf"));
  CHECK(bad.status() == ReportStatus::HypothesisNotMet);
  CHECK(failed_hypothesis(bad, "omega is closed"));
}

TEST_CASE("rotation profile") {
  CHECK(verify_ZB_profile(catalog_analysis("abelian-torus")).status() == ReportStatus::Pass);
  CHECK(verify_ZB_profile(catalog_analysis("oscillator", {{"n", 3}})).status() == ReportStatus::Pass);
  const VerifierReport t = verify_ZB_profile(catalog_analysis("two-dim-solvable"));
  CHECK(t.status() == ReportStatus::HypothesisNotMet);
  CHECK(failed_hypothesis(t, "omega is quasi-invariant"));
}

TEST_CASE("no alerts on the catalog and a corpus slice") {
  for (const auto& e : catalog_all()) {
    InstanceAnalysis a;
    try {
      a = analyze_instance(e.instance);
    } catch (const UnsupportedEigenvalueField&) {
      continue;
    }
    for (const auto& r : verify_all(a)) {
      CAPTURE(e.instance.name);
      CAPTURE(r.theorem);
      CHECK(r.alerts.empty());
      CHECK(r.research_flags.empty());
      if (!r.hypotheses_met()) CHECK(r.conclusions.empty());
      if (r.status() == ReportStatus::Pass) CHECK(all_conclusions_hold(r));
    }
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const InstanceAnalysis a = analyze_instance(corpus_instance(seed, 6));
    for (const auto& r : verify_all(a)) {
      CAPTURE(seed);
      CAPTURE(r.theorem);
      CHECK(r.alerts.empty());
      if (!r.hypotheses_met()) CHECK(r.conclusions.empty());
    }
  }
}

TEST_CASE("catalog observations") {
  const InstanceAnalysis gn = catalog_analysis("Gn");
  CHECK(observe(gn, "omega.nil_invariant") == "true");
  CHECK(observe(gn, "omega.quasi_invariant") == "false");
  CHECK(observe(gn, "theorem.nil_skew") == "pass");
  CHECK(expectation_mismatches(catalog_get("Gn")).empty());
  CHECK(expectation_mismatches(catalog_get("cubic-eigenvalue")).empty());
}
