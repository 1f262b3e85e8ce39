#include "support.hpp"

#include "lieq/catalog.hpp"
#include "lieq/errors.hpp"
#include "lieq/random.hpp"
#include "lieq/structure.hpp"

#include <doctest.h>

using namespace testing;

namespace {

RationalMatrix standard_j(std::size_t n) {
  RationalMatrix j(n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  return j;
}

} // namespace

TEST_CASE("form construction checks the kind") {
  CHECK_THROWS_AS(BilinearForm(FormKind::Skew, RationalMatrix{{0, 1}, {1, 0}}), InvalidStructure);
  CHECK_THROWS_AS(BilinearForm(FormKind::Symmetric, RationalMatrix{{0, 1}, {-1, 0}}), InvalidStructure);
}

TEST_CASE("kernels") {
  const LieAlgebra g = g1();
  const BilinearForm w = skew(g, {{"a", "z", 1}, {"x", "y", 1}});
  CHECK(form_kernel(w).is_zero());
  CHECK(is_nondegenerate(w));
  CHECK(form_kernel(BilinearForm::zero(FormKind::Skew, 4)).is_whole());
  CHECK(orthogonal_complement(w, span(g, {"x", "y"})) == span(g, {"a", "z"}));
  CHECK(orthogonal_complement(w, Subspace::zero(4)).is_whole());
  CHECK(orthogonal_complement(w, Subspace::whole(4)).is_zero());
}

TEST_CASE("skew sets") {
  const LieAlgebra s = su2();
  CHECK(skew_set(s, symmetric(killing_form(s))).is_whole());
  const LieAlgebra t = two_dim();
  CHECK(skew_set(t, skew(t, {{"x", "y", 1}})) == span(t, {"y"}));
  CHECK(skew_set(t, BilinearForm::zero(FormKind::Skew, 2)).is_whole());
  const LieAlgebra g = g1();
  CHECK(is_subalgebra(g, skew_set(g, skew(g, {{"a", "z", 1}, {"x", "y", 1}}))));
}

TEST_CASE("closedness") {
  const LieAlgebra ab = LieAlgebra::abelian(4);
  CHECK(is_closed(ab, random_form(ab, FormKind::Skew, 3)));
  const LieAlgebra t = two_dim();
  CHECK(is_closed(t, skew(t, {{"x", "y", 1}})));
  const LieAlgebra g = g1();
  const auto bad = closedness_violation(g, skew(g, {{"a", "z", 1}, {"x", "y", 1}}));
  REQUIRE(bad);
  CHECK((*bad)[0] == 0);
}

TEST_CASE("effectiveness") {
  CHECK(is_effective(g1(), skew(g1(), {{"a", "z", 1}, {"x", "y", 1}})));
  CHECK_FALSE(is_effective(heisenberg1(), BilinearForm::zero(FormKind::Skew, 3)));
  const LieAlgebra h = heisenberg1();
  CHECK_FALSE(is_effective(h, skew(h, {{"x", "y", 1}})));
}

TEST_CASE("J- and h-structures") {
  CHECK_THROWS_AS(JStructure(RationalMatrix{{1, 0}, {0, 1}}), InvalidStructure);
  const JStructure j(standard_j(2));
  CHECK(j.kernel().is_zero());
  CHECK_THROWS_AS(HStructure(j, symmetric(RationalMatrix{{1, 0}, {0, 2}})), InvalidStructure);
  const HStructure h(j, symmetric(RationalMatrix::identity(2)));
  CHECK(h.omega().gram() == RationalMatrix{{0, 1}, {-1, 0}});
  CHECK(form_kernel(h.metric()) == form_kernel(h.omega()));
}

TEST_CASE("unitary algebras") {
  const HStructure plane(JStructure(standard_j(2)), symmetric(RationalMatrix::identity(2)));
  CHECK(unitary_algebra(plane).size() == 1);
  CHECK(unitary_is_totally_real(plane));
  const HStructure u11(JStructure(standard_j(4)), symmetric(RationalMatrix::diagonal({1, 1, -1, -1})));
  CHECK(unitary_algebra(u11).size() == 4);
  CHECK(unitary_is_totally_real(u11));
  RationalMatrix jd(4, 4);
  jd(1, 0) = 1;
  jd(0, 1) = -1;
  const HStructure degenerate(JStructure(jd), symmetric(RationalMatrix::diagonal({1, 1, 0, 0})));
  CHECK_THROWS_AS(unitary_algebra(degenerate), DegenerateHStructure);
}

TEST_CASE("subalgebras attached to h-structures") {
  const LieAlgebra ab = LieAlgebra::abelian(4);
  const HStructure h(JStructure(standard_j(4)), symmetric(RationalMatrix::diagonal({1, 1, -1, -1})));
  CHECK(g_J(ab, h.j()).is_whole());
  CHECK(g_J_h(ab, h).is_whole());
  CHECK(g_h(ab, h).is_whole());

  for (const auto& e : catalog_all()) {
    if (!e.instance.h) continue;
    CAPTURE(e.instance.name);
    const LieAlgebra& g = e.instance.algebra;
    const HStructure& hs = *e.instance.h;
    CHECK(g_h(g, hs).contains(g_metric_J(g, hs)));
    CHECK(g_J_h(g, hs).contains(g_h(g, hs)));
    if (hs.kernel() == hs.j().kernel()) CHECK(g_h(g, hs) == g_metric_J(g, hs));
  }
}

TEST_CASE("homogeneous model conditions") {
  const LieAlgebra ab = LieAlgebra::abelian(2);
  const HStructure plane(JStructure(standard_j(2)), symmetric(RationalMatrix::identity(2)));
  CHECK(validate_homogeneous_model(ab, plane).h_algebra());

  // su(2) x R with kernel span{e1, e2}, which is not a subalgebra.
  const LieAlgebra g = direct_product(su2(), LieAlgebra::abelian(1, "t"));
  RationalMatrix j(4, 4);
  j(3, 2) = 1;
  j(2, 3) = -1;
  const HStructure h(JStructure(j), symmetric(RationalMatrix::diagonal({0, 0, 1, 1})));
  const ModelReport m = validate_homogeneous_model(g, h);
  CHECK_FALSE(m.subalgebra);
  CHECK_FALSE(m.almost_h_algebra());
  REQUIRE_FALSE(m.violations.empty());

  const CatalogEntry hopf = catalog_get("u2-hopf");
  const ModelReport hm = validate_homogeneous_model(hopf.instance.algebra, *hopf.instance.h);
  CHECK(hm.almost_h_algebra());
}

TEST_CASE("ideals inside skew sets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    CAPTURE(seed);
    const Instance inst = corpus_instance(seed, 6);
    const LieAlgebra& g = inst.algebra;
    for (const BilinearForm* f : {&*inst.omega, &*inst.metric}) {
      const Subspace gb = skew_set(g, *f);
      CHECK(is_subalgebra(g, gb));
      const Subspace j = maximal_ideal_within(g, gb);
      CHECK(intersect(j, form_kernel(*f)).contains(bracket_space(g, orthogonal_complement(*f, j), j)));
      if (!f->is_symmetric() && gb.is_whole() && is_effective(g, *f)) {
        CHECK(g.is_abelian());
        CHECK(is_nondegenerate(*f));
      }
    }
  }
}

TEST_CASE("random forms") {
  const LieAlgebra ab = LieAlgebra::abelian(2);
  FormOptions nd;
  nd.nondegenerate = true;
  const BilinearForm w = random_form(ab, FormKind::Skew, 11, nd);
  CHECK(sgn(w.at(0, 1)) != 0);
  const LieAlgebra g = g1();
  CHECK(random_form(g, FormKind::Symmetric, 5).gram() == random_form(g, FormKind::Symmetric, 5).gram());
  CHECK_THROWS_AS(random_form(heisenberg1(), FormKind::Skew, 1, nd), GenerationFailed);

  FormOptions inv;
  inv.constraint = FormConstraint::Invariant;
  const LieAlgebra s = su2();
  CHECK(skew_set(s, random_form(s, FormKind::Symmetric, 2, inv)).is_whole());
}
