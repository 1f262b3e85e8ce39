#include "support.hpp"

#include "lieq/catalog.hpp"
#include "lieq/errors.hpp"
#include "lieq/invariance.hpp"
#include "lieq/random.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("Jordan parts of adjoint operators") {
  const LieAlgebra h = heisenberg1();
  const Vector u = vec(h, {{"x", 1}, {"y", 3}});
  const OperatorDecomposition d = ad_jordan_parts(h, u);
  CHECK(d.nilpotent == h.ad(u));
  CHECK(d.semisimple.is_zero());
  CHECK(d.imaginary.is_zero());
  CHECK(d.real_split.is_zero());

  const LieAlgebra g = g1();
  const OperatorDecomposition a = ad_jordan_parts(g, vec(g, {{"a", 1}}));
  CHECK(a.real_split == g.ad_basis(0));
  CHECK(a.imaginary.is_zero());
  CHECK(a.nilpotent.is_zero());

  const LieAlgebra osc = catalog_get("oscillator", {{"n", 2}}).instance.algebra;
  const OperatorDecomposition r = ad_jordan_parts(osc, osc.basis_vector(0));
  CHECK(r.imaginary == osc.ad_basis(0));
  CHECK(r.real_split.is_zero());
  CHECK(r.nilpotent.is_zero());

  const LieAlgebra cubic = catalog_get("cubic-eigenvalue").instance.algebra;
  CHECK_THROWS_AS(ad_jordan_parts(cubic, cubic.basis_vector(0)), UnsupportedEigenvalueField);
}

TEST_CASE("split replicas sum to the operator") {
  RationalMatrix m(4, 4);
  m(0, 0) = 1;
  m(1, 1) = -1;
  m(2, 3) = 2;
  m(3, 2) = 1;
  const auto parts = split_replicas(m);
  RationalMatrix sum(4, 4);
  for (const auto& p : parts) sum = sum + p;
  CHECK(sum == m);
  CHECK(parts.size() == 2);
}

TEST_CASE("two-dimensional solvable algebra") {
  const LieAlgebra t = two_dim();
  const auto ctx = make_context(t);
  const InvarianceVerdict v = analyze_form(*ctx, skew(t, {{"x", "y", 1}}));
  CHECK(v.nil_invariant);
  CHECK_FALSE(v.quasi_invariant);
  CHECK_FALSE(v.invariant);
  REQUIRE_FALSE(v.witnesses.empty());
  CHECK(v.witnesses[0].generator == "phi_split(ad x)");
  CHECK_FALSE(full_invariance_check(t, skew(t, {{"x", "y", 1}})));
}

TEST_CASE("split extensions of Heisenberg algebras") {
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    const Instance inst = catalog_get("Gn", {{"n", n}}).instance;
    const auto ctx = make_context(inst.algebra, inst.levi);
    REQUIRE(inst.omega);
    CHECK(is_nondegenerate(*inst.omega));
    const InvarianceVerdict v = analyze_form(*ctx, *inst.omega);
    CHECK(v.nil_invariant);
    CHECK_FALSE(v.quasi_invariant);
    REQUIRE_FALSE(v.witnesses.empty());
    CHECK(v.witnesses[0].generator == "phi_split(ad a)");
    CHECK(sgn(v.witnesses[0].defect) != 0);
  }
}

TEST_CASE("trivial verdicts") {
  const LieAlgebra ab = LieAlgebra::abelian(4);
  const auto actx = make_context(ab);
  const BilinearForm w = random_form(ab, FormKind::Skew, 4);
  CHECK(full_invariance_check(ab, w));
  CHECK(quasi_invariance_check(*actx, w).holds);
  CHECK(acis_image_check(*actx, w));

  for (const auto* name : {"su2", "sl2"}) {
    const Instance inst = catalog_get(name).instance;
    const auto ctx = make_context(inst.algebra, inst.levi);
    const BilinearForm k = symmetric(killing_form(inst.algebra));
    CHECK(full_invariance_check(inst.algebra, k));
    CHECK(analyze_form(*ctx, k).invariant);
    CHECK(analyze_form(*ctx, BilinearForm::zero(FormKind::Skew, 3)).nil_invariant);
  }
}

TEST_CASE("h-structure verdicts") {
  const Instance flat = catalog_get("abelian-torus", {{"p", 1}, {"q", 1}}).instance;
  const auto fctx = make_context(flat.algebra);
  const HInvarianceVerdict fv = h_structure_invariance(*fctx, *flat.h);
  CHECK(fv.metric.invariant);
  CHECK(fv.omega.invariant);
  CHECK(fv.quasi_invariant);

  const Instance hopf = catalog_get("u2-hopf").instance;
  const auto hctx = make_context(hopf.algebra, hopf.levi);
  const HInvarianceVerdict hv = h_structure_invariance(*hctx, *hopf.h);
  CHECK(hv.nil_invariant == (hv.metric.nil_invariant && hv.omega.nil_invariant));
  CHECK(hv.quasi_invariant == (hv.metric.quasi_invariant && hv.omega.quasi_invariant));
}

TEST_CASE("generator images land in the skew set") {
  const LieAlgebra g = g1();
  const auto ctx = make_context(g);
  const BilinearForm w = skew(g, {{"a", "z", 1}, {"x", "y", 1}});
  const Subspace gw = skew_set(g, w);
  for (const auto& gen : ctx->generators.nilpotent) {
    for (std::size_t j = 0; j < g.dim(); ++j) CHECK(gw.contains(gen.matrix * g.basis_vector(j)));
  }
  for (const auto& e : catalog_all()) {
    if (!e.instance.metric) continue;
    std::shared_ptr<const AlgebraContext> c;
    try {
      c = make_context(e.instance.algebra, e.instance.levi);
    } catch (const UnsupportedEigenvalueField&) {
      continue;
    }
    CAPTURE(e.instance.name);
    if (quasi_invariance_check(*c, *e.instance.metric).holds) CHECK(acis_image_check(*c, *e.instance.metric));
  }
}

TEST_CASE("generator sets") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CAPTURE(seed);
    const RandomAlgebra r = random_algebra({static_cast<AlgebraClass>(seed % 4), 3 + seed % 5, seed});
    const auto ctx = make_context(r.algebra, r.levi);
    for (const auto& gen : ctx->generators.nilpotent) CHECK(is_nilpotent(gen.matrix));
    for (const auto& gen : ctx->generators.split) {
      const OperatorDecomposition d = decompose(gen.matrix);
      CHECK(d.real_split == gen.matrix);
    }
    const auto closure = ctx->generators.closure(true);
    std::vector<Vector> flat;
    for (const auto& m : closure) flat.push_back(m.entries());
    const std::size_t n = r.algebra.dim();
    const Subspace space = Subspace::span(n * n, flat);
    for (const auto& a : closure) {
      for (const auto& b : closure) CHECK(space.contains((a * b - b * a).entries()));
    }
  }
}

TEST_CASE("verdict implications on the corpus") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    CAPTURE(seed);
    const Instance inst = corpus_instance(seed, 7);
    const auto ctx = make_context(inst.algebra, inst.levi);
    for (const BilinearForm* f : {&*inst.omega, &*inst.metric}) {
      const InvarianceVerdict v = analyze_form(*ctx, *f);
      if (v.invariant) CHECK(v.quasi_invariant);
      if (v.quasi_invariant) CHECK(v.nil_invariant);
      CHECK(v.invariant == full_invariance_check(inst.algebra, *f));
      if (f->is_symmetric()) {
        CHECK(v.nil_invariant == v.quasi_invariant);
        if (v.nil_invariant && is_solvable(inst.algebra)) CHECK(v.invariant);
      }
      if (v.nil_invariant) {
        const Subspace gb = skew_set(inst.algebra, *f);
        CHECK(gb.contains(ctx->profile.nilradical));
      }
    }
  }
}
