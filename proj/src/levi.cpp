#include "lieq/levi.hpp"

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"

namespace lieq {

std::string to_string(LeviSource source) {
  switch (source) {
    case LeviSource::Solvable: return "solvable";
    case LeviSource::Declared: return "declared";
    case LeviSource::DirectProduct: return "direct-product";
    case LeviSource::QuotientOnly: return "quotient-only";
  }
  return "unknown";
}

Subspace generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& generators) {
  Subspace s = Subspace::span(g.dim(), generators);
  for (;;) {
    Subspace next = s + bracket_space(g, s, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

void verify_levi_data(const LieAlgebra& g, const StructureProfile& profile, const LeviData& levi) {
  const std::size_t n = g.dim();
  const Subspace& k = levi.compact;
  const Subspace& s = levi.noncompact;
  if (k.ambient_dim() != n || s.ambient_dim() != n) throw InvalidLeviData("Levi data has the wrong ambient dimension");
  if (!is_subalgebra(g, k)) throw InvalidLeviData("declared K is not a subalgebra");
  if (!is_subalgebra(g, s)) throw InvalidLeviData("declared S is not a subalgebra");
  if (!bracket_space(g, k, s).is_zero()) throw InvalidLeviData("declared K and S do not commute");
  const Subspace ks = k + s;
  if (ks.dim() != k.dim() + s.dim()) throw InvalidLeviData("declared K and S intersect");
  if (ks.dim() + profile.solvable_radical.dim() != n || !intersect(ks, profile.solvable_radical).is_zero()) {
    throw InvalidLeviData("declared K + S is not complementary to the radical");
  }
  if (k.dim() > 0 && !is_compact_type(restrict_to(g, k))) throw InvalidLeviData("declared K is not of compact type");
  if (s.dim() > 0) {
    const LieAlgebra sa = restrict_to(g, s);
    if (!is_semisimple(sa)) throw InvalidLeviData("declared S is not semisimple");
    for (const auto& ideal : simple_ideals(sa)) {
      if (is_compact_type(restrict_to(sa, ideal))) throw InvalidLeviData("declared S has a compact factor");
    }
  }
  for (const auto& v : levi.nilpotents) {
    if (!s.contains(v)) throw InvalidLeviData("declared nilpotent lies outside S");
    if (!is_nilpotent(g.ad(v))) throw InvalidLeviData("declared nilpotent has non-nilpotent adjoint");
  }
  if (generated_subalgebra(g, levi.nilpotents) != s) throw InvalidLeviData("declared nilpotents do not generate S");
}

LeviResolution resolve_levi(const LieAlgebra& g, const StructureProfile& profile,
                            const std::optional<LeviData>& declared) {
  const std::size_t n = g.dim();
  LeviResolution r;
  r.quotient_compact = profile.levi_quotient_compact;
  if (profile.solvable_radical.dim() == n) {
    r.source = LeviSource::Solvable;
    r.has_splitting = true;
    r.compact = Subspace::zero(n);
    r.noncompact = Subspace::zero(n);
    return r;
  }
  if (declared) {
    verify_levi_data(g, profile, *declared);
    r.source = LeviSource::Declared;
    r.has_splitting = true;
    r.compact = declared->compact;
    r.noncompact = declared->noncompact;
    r.nilpotents = declared->nilpotents;
    return r;
  }
  const Subspace z = centralizer(g, profile.solvable_radical);
  const Subspace c = bracket_space(g, z, z);
  if (c.dim() + profile.solvable_radical.dim() == n && intersect(c, profile.solvable_radical).is_zero()) {
    r.source = LeviSource::DirectProduct;
    r.has_splitting = true;
    std::vector<Vector> kv;
    std::vector<Vector> sv;
    const LieAlgebra ca = restrict_to(g, c);
    for (const auto& ideal : simple_ideals(ca)) {
      const bool compact = is_compact_type(restrict_to(ca, ideal));
      for (const auto& v : ideal.vectors()) (compact ? kv : sv).push_back(c.basis() * v);
    }
    r.compact = Subspace::span(n, kv);
    r.noncompact = Subspace::span(n, sv);
    return r;
  }
  r.source = LeviSource::QuotientOnly;
  return r;
}

} // namespace lieq
