#include "lieq/theorems.hpp"

#include "lieq/errors.hpp"
#include "lieq/structure.hpp"
#include "lieq/linalg.hpp"

#include <algorithm>


namespace lieq {

namespace {

struct Ctx {
  const InstanceAnalysis& a;
  const LieAlgebra& g;
  const StructureProfile& p;
  const LeviResolution& levi;
  std::size_t n;

  explicit Ctx(const InstanceAnalysis& an)
      : a(an), g(an.instance.algebra), p(an.context->profile), levi(an.context->levi), n(an.instance.algebra.dim()) {}

  Subspace whole() const { return Subspace::whole(n); }
  Subspace br(const Subspace& x, const Subspace& y) const { return bracket_space(g, x, y); }
  const Subspace& nil() const { return p.nilradical; }
  const Subspace& rad() const { return p.solvable_radical; }
};

class Report {
public:
  Report(const InstanceAnalysis& a, const std::string& id) : labels_(a.instance.algebra.labels()) {
    r_.theorem = id;
    r_.statement = find_theorem(id).statement;
    r_.instance = a.instance.name;
  }

  /// Returns the value so callers can stop early.
  bool hyp(std::string label, bool holds, std::string witness = {}) {
    r_.hypotheses.push_back({std::move(label), holds, holds ? std::string{} : std::move(witness)});
    return holds;
  }

  bool hyp_verdict(const std::string& label, const std::optional<InvarianceVerdict>& v, bool quasi) {
    if (!v) return hyp(label, false, "form not supplied");
    const bool holds = quasi ? v->quasi_invariant : v->nil_invariant;
    const bool conclusive = quasi ? v->quasi_conclusive : v->nil_conclusive;
    if (holds && !conclusive) {
      approximate_ = true;
      r_.notes.push_back(label + " rests on the generator approximation");
    }
    std::string w;
    if (!holds && !v->witnesses.empty()) {
      const auto& x = v->witnesses.front();
      w = x.generator + " at (" + labels_[x.y] + ", " + labels_[x.z] + "), defect " + to_string(x.defect);
    }
    return hyp(label, holds, w);
  }

  bool met() const { return r_.hypotheses_met(); }

  void claim(Claim c) { r_.conclusions.push_back(std::move(c)); }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }

  VerifierReport finish() {
    r_.mode = approximate_ ? VerdictMode::GeneratorApproximation : VerdictMode::Exact;
    if (!r_.hypotheses_met()) r_.conclusions.clear();
    for (const auto& c : r_.conclusions) {
      if (c.holds) continue;
      const std::string text = r_.instance + ": " + r_.theorem + ": " + c.label + " fails (" + c.witness + ")";
      (approximate_ ? r_.research_flags : r_.alerts).push_back(text);
    }
    return std::move(r_);
  }

private:
  VerifierReport r_;
  std::vector<std::string> labels_;
  bool approximate_ = false;
};

Claim flag(std::string label, bool holds, std::string witness = {}) {
  return {std::move(label), holds, holds ? std::string{} : std::move(witness)};
}

Claim inclusion(const LieAlgebra& g, std::string label, const Subspace& a, const Subspace& b) {
  for (const auto& v : a.vectors()) {
    if (!b.contains(v)) return {std::move(label), false, format_vector(g, v) + " lies outside " + format_subspace(g, b)};
  }
  return {std::move(label), true, {}};
}

Claim equality(const LieAlgebra& g, std::string label, const Subspace& a, const Subspace& b) {
  if (a == b) return {std::move(label), true, {}};
  return {std::move(label), false, format_subspace(g, a) + " != " + format_subspace(g, b)};
}

Claim vanishes(const LieAlgebra& g, std::string label, const Subspace& a) {
  return equality(g, std::move(label), a, Subspace::zero(g.dim()));
}

Claim orthogonality(const LieAlgebra& g, const BilinearForm& f, std::string label, const Subspace& a,
                    const Subspace& b) {
  for (const auto& u : a.vectors()) {
    for (const auto& v : b.vectors()) {
      const Rational x = f(u, v);
      if (sgn(x) != 0) {
        return {std::move(label), false,
                "form(" + format_vector(g, u) + ", " + format_vector(g, v) + ") = " + to_string(x)};
      }
    }
  }
  return {std::move(label), true, {}};
}

Claim quotient_compact(const Ctx& c) {
  const bool ok = c.p.levi_quotient_dim == 0 || c.p.levi_quotient_compact;
  return flag("g/R is trivial or of compact type", ok,
              "g/R has dimension " + std::to_string(c.p.levi_quotient_dim) + " and an indefinite Killing form");
}

/// g = K x R with K compact: the centralizer of R spans g together with R.
Claim direct_product_claim(const Ctx& c) {
  const Subspace z = centralizer(c.g, c.rad());
  if (!quotient_compact(c).holds) return flag("g = K x R with K compact", false, "g/R is not of compact type");
  if ((z + c.rad()).is_whole()) return flag("g = K x R with K compact", true);
  return flag("g = K x R with K compact", false,
              "Z_g(R) + R = " + format_subspace(c.g, z + c.rad()) + " is a proper subspace");
}

Claim effective_claim(const LieAlgebra& g, const Subspace& kernel, std::string label = "(g, omega) is effective") {
  const Subspace bad = maximal_ideal_within(g, kernel);
  return flag(std::move(label), bad.is_zero(), "kernel contains the ideal " + format_subspace(g, bad));
}

bool hyp_claim(Report& r, const Claim& c) { return r.hyp(c.label, c.holds, c.witness); }

Claim closed_claim(const LieAlgebra& g, const BilinearForm& f) {
  const auto t = closedness_violation(g, f);
  if (!t) return flag("omega is closed", true);
  const auto& l = g.labels();
  return flag("omega is closed", false, "cyclic sum nonzero on (" + l[(*t)[0]] + ", " + l[(*t)[1]] + ", " + l[(*t)[2]] + ")");
}

Claim imaginary_type(const Ctx& c, const std::string& label, const Subspace& on) {
  for (const auto& r : c.rad().vectors()) {
    const RationalMatrix split = ad_jordan_parts(c.g, r).real_split;
    const RationalMatrix restricted = split * on.basis();
    if (!restricted.is_zero()) return flag(label, false, "phi_split(ad " + format_vector(c.g, r) + ") is nonzero");
  }
  return flag(label, true);
}

Subspace center_of(const LieAlgebra& g, const Subspace& s) { return intersect(centralizer(g, s), s); }

std::vector<Subspace> simple_ideals_in(const LieAlgebra& g, const Subspace& k) {
  std::vector<Subspace> out;
  if (k.is_zero()) return out;
  const LieAlgebra ka = restrict_to(g, k);
  for (const auto& ideal : simple_ideals(ka)) out.push_back(apply(k.basis(), ideal));
  return out;
}

bool need_omega(Report& r, const Ctx& c) {
  if (!c.a.instance.omega) return r.hyp("skew form omega supplied", false, "instance has no omega");
  return r.hyp("skew form omega supplied", true);
}

}  // namespace

VerifierReport verify_nil_skew(const InstanceAnalysis& a) {
  Report r(a, "nil_skew");
  const Ctx c(a);
  if (need_omega(r, c)) {
    r.hyp_verdict("omega is nil-invariant", a.omega, false);
    hyp_claim(r, effective_claim(c.g, form_kernel(*a.instance.omega)));
  }
  if (r.met()) {
    const BilinearForm& w = *a.instance.omega;
    const Subspace perp = form_kernel(w);
    const Subspace gw = skew_set(c.g, w);
    const Subspace rw = intersect(c.rad(), gw);
    const Subspace nn = c.br(c.nil(), c.nil());
    r.claim(quotient_compact(c));
    r.claim(vanishes(c.g, "[N,[N,N]] = 0", c.br(c.nil(), nn)));
    r.claim(flag("g nilpotent implies g abelian", !c.p.is_nilpotent || c.g.is_abelian(), "g is nilpotent and not abelian"));
    r.claim(inclusion(c.g, "[R_omega,[G_omega,G_omega]] in kernel", c.br(rw, c.br(gw, gw)), perp));
    r.claim(orthogonality(c.g, w, "[N,N] orthogonal to N", nn, c.nil()));
    r.claim(inclusion(c.g, "[[N,N]^perp,[N,N]] in kernel", c.br(orthogonal_complement(w, nn), nn), perp));
    r.claim(orthogonality(c.g, w, "[g,N] orthogonal to Z_g(N)", c.br(c.whole(), c.nil()), centralizer(c.g, c.nil())));
    r.claim(equality(c.g, "R_omega = N", rw, c.nil()));
  }
  return r.finish();
}


VerifierReport verify_skew_solvable(const InstanceAnalysis& a) {
  Report r(a, "skew_solvable");
  const Ctx c(a);
  if (need_omega(r, c)) {
    r.hyp_verdict("omega is quasi-invariant", a.omega, true);
    hyp_claim(r, effective_claim(c.g, form_kernel(*a.instance.omega)));
    hyp_claim(r, direct_product_claim(c));
  }
  if (r.met()) {
    const Subspace perp = form_kernel(*a.instance.omega);
    const Subspace nn = c.br(c.nil(), c.nil());
    r.claim(vanishes(c.g, "N is abelian", nn));
    r.claim(imaginary_type(c, "R is of imaginary type", c.whole()));
    r.claim(vanishes(c.g, "[N,N] meets the kernel trivially", intersect(nn, perp)));
    r.claim(inclusion(c.g, "[N,N] in Z(g)", nn, c.p.center));
    r.claim(inclusion(c.g, "[R,N] in Z(N)", c.br(c.rad(), c.nil()), center_of(c.g, c.nil())));
  }
  return r.finish();
}

VerifierReport verify_quasi_solv_abelian(const InstanceAnalysis& a) {
  Report r(a, "quasi_solv_abelian");
  const Ctx c(a);
  if (need_omega(r, c)) {
    r.hyp("g is solvable", c.p.is_solvable, "g/R has dimension " + std::to_string(c.p.levi_quotient_dim));
    r.hyp("omega is nondegenerate", is_nondegenerate(*a.instance.omega),
          "kernel " + format_subspace(c.g, form_kernel(*a.instance.omega)));
    r.hyp_verdict("omega is quasi-invariant", a.omega, true);
  }
  if (r.met()) r.claim(vanishes(c.g, "g is abelian", derived_algebra(c.g)));
  return r.finish();
}

VerifierReport verify_radical_nilpotent(const InstanceAnalysis& a) {
  Report r(a, "radical_nilpotent");
  const Ctx c(a);
  const auto& h = a.instance.h;
  if (r.hyp("h-structure supplied", h.has_value(), "instance has no h-structure")) {
    r.hyp_verdict("metric is nil-invariant", a.metric, false);
    r.hyp_verdict("omega is nil-invariant", a.omega, false);
    hyp_claim(r, effective_claim(c.g, h->kernel(), "(g, h) is effective"));
  }
  if (r.met()) {
    const Subspace& perp = h->kernel();
    const RationalMatrix& j = h->j().matrix();
    const BilinearForm& metric = h->metric();
    const Subspace gn = c.br(c.whole(), c.nil());
    r.claim(equality(c.g, "R = N", c.rad(), c.nil()));
    r.claim(vanishes(c.g, "[N,[N,N]] = 0", c.br(c.nil(), c.br(c.nil(), c.nil()))));
    r.claim(quotient_compact(c));
    if (c.p.is_solvable) {
      r.claim(vanishes(c.g, "solvable g is abelian", derived_algebra(c.g)));
      r.claim(flag("solvable g has a nondegenerate h-structure", h->is_nondegenerate(),
                   "kernel " + format_subspace(c.g, perp)));
    }
    r.claim(equality(c.g, "J[g,N] = [Jg,N] mod kernel", apply(j, gn) + perp, c.br(apply(j, c.whole()), c.nil()) + perp));
    r.claim(inclusion(c.g, "J preserves [g,N] + kernel", apply(j, gn + perp), gn + perp));
    r.claim(orthogonality(c.g, metric, "[g_J^h,[g,N]] orthogonal to [g,N]", c.br(g_J_h(c.g, *h), gn), gn));
    const Subspace target = intersect(gn, perp);
    Claim e1{"E1(a) in [g,N] and kernel for a in R", true, {}};
    for (const auto& v : c.rad().vectors()) {
      const Subspace e = Subspace(c.n, fitting_decomposition(c.g.ad(v)).e1);
      if (!target.contains(e)) {
        e1 = flag(e1.label, false, "E1(" + format_vector(c.g, v) + ") = " + format_subspace(c.g, e));
        break;
      }
    }
    r.claim(e1);
  }
  return r.finish();
}

VerifierReport verify_symplectic_structure(const InstanceAnalysis& a) {
  Report r(a, "symplectic_structure");
  const Ctx c(a);
  if (need_omega(r, c)) {
    hyp_claim(r, closed_claim(c.g, *a.instance.omega));
    r.hyp_verdict("omega is nil-invariant", a.omega, false);
    hyp_claim(r, quotient_compact(c));
  }
  if (r.met()) {
    const BilinearForm& w = *a.instance.omega;
    const Subspace perp = form_kernel(w);
    const Subspace g = c.whole();
    r.claim(orthogonality(c.g, w, "[g,g] orthogonal to N", c.br(g, g), c.nil()));
    r.claim(orthogonality(c.g, w, "[N,N] orthogonal to g", c.br(c.nil(), c.nil()), g));
    const bool effective = effective_claim(c.g, perp).holds;
    if (effective) r.claim(vanishes(c.g, "N is abelian", c.br(c.nil(), c.nil())));
    else r.note("(g, omega) is not effective; the splitting claims are not evaluated");
    if (c.levi.has_splitting) {
      const Subspace& k = c.levi.compact;
      r.claim(orthogonality(c.g, w, "K orthogonal to R", k, c.rad()));
      r.claim(orthogonality(c.g, w, "[K,N] orthogonal to g", c.br(k, c.nil()), g));
      r.claim(equality(c.g, "kernel = (kernel in K) + (kernel in R)", perp, intersect(perp, k) + intersect(perp, c.rad())));
      if (effective) r.claim(vanishes(c.g, "[K,R] = 0", c.br(k, c.rad())));
    } else {
      r.note("no Levi splitting is known (source " + to_string(c.levi.source) + "); claims involving K are not evaluated");
      if (effective) r.claim(direct_product_claim(c));
    }
  }
  return r.finish();
}

VerifierReport verify_metric_symplectic(const InstanceAnalysis& a) {
  Report r(a, "metric_symplectic");
  const Ctx c(a);
  const bool have = need_omega(r, c) && r.hyp("symmetric form metric supplied", a.instance.metric.has_value());
  if (have) {
    const BilinearForm& w = *a.instance.omega;
    const BilinearForm& m = *a.instance.metric;
    hyp_claim(r, closed_claim(c.g, w));
    r.hyp_verdict("omega is nil-invariant", a.omega, false);
    r.hyp_verdict("omega is quasi-invariant", a.omega, true);
    r.hyp_verdict("metric is nil-invariant", a.metric, false);
    r.hyp("omega and metric share their kernel", form_kernel(w) == form_kernel(m),
          format_subspace(c.g, form_kernel(w)) + " vs " + format_subspace(c.g, form_kernel(m)));
    hyp_claim(r, effective_claim(c.g, form_kernel(w)));
  }
  if (r.met()) {
    const BilinearForm& w = *a.instance.omega;
    const Subspace perp = form_kernel(w);
    r.claim(quotient_compact(c));
    r.claim(vanishes(c.g, "R is abelian", c.br(c.rad(), c.rad())));
    r.claim(direct_product_claim(c));
    if (c.levi.has_splitting) r.claim(inclusion(c.g, "kernel in K", perp, c.levi.compact));
    else r.claim(vanishes(c.g, "kernel meets R trivially", intersect(perp, c.rad())));
    const RationalMatrix gram = restricted_gram(w, c.rad());
    r.claim(flag("omega is nondegenerate on R", rank(gram) == gram.rows(),
                 "restriction to R has rank " + std::to_string(rank(gram)) + " < " + std::to_string(gram.rows())));
  }
  return r.finish();
}

VerifierReport verify_pk_orthogonality(const InstanceAnalysis& a) {
  Report r(a, "pk_orthogonality");
  const Ctx c(a);
  const auto& h = a.instance.h;
  if (r.hyp("h-structure supplied", h.has_value(), "instance has no h-structure")) {
    hyp_claim(r, closed_claim(c.g, h->omega()));
    const ModelReport model = validate_homogeneous_model(c.g, *h);
    std::string w;
    if (!model.violations.empty()) w = model.violations.front().condition + ": " + model.violations.front().detail;
    r.hyp("model is an almost h-algebra", model.almost_h_algebra(), w);
    r.hyp_verdict("metric is nil-invariant", a.metric, false);
    r.hyp_verdict("omega is nil-invariant", a.omega, false);
    hyp_claim(r, effective_claim(c.g, h->kernel(), "(g, h) is effective"));
    hyp_claim(r, direct_product_claim(c));
    r.hyp("R is abelian", c.br(c.rad(), c.rad()).is_zero());
    r.hyp("Levi splitting K known", c.levi.has_splitting, "source " + to_string(c.levi.source));
  }
  if (r.met()) {
    const BilinearForm& w = h->omega();
    const BilinearForm& m = h->metric();
    const Subspace& perp = h->kernel();
    const Subspace& k = c.levi.compact;
    r.claim(orthogonality(c.g, w, "K orthogonal to R under omega", k, c.rad()));
    r.claim(orthogonality(c.g, m, "K orthogonal to R under the metric", k, c.rad()));
    r.claim(equality(c.g, "kernel = K^perp_omega in K", perp, intersect(orthogonal_complement(w, k), k)));
    const auto factors = simple_ideals_in(c.g, k);
    Claim om{"simple ideals of K mutually orthogonal under omega", true, {}};
    Claim mm{"simple ideals of K mutually orthogonal under the metric", true, {}};
    Subspace pieces = Subspace::zero(c.n);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      pieces = pieces + intersect(perp, factors[i]);
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        if (om.holds) om = orthogonality(c.g, w, om.label, factors[i], factors[j]);
        if (mm.holds) mm = orthogonality(c.g, m, mm.label, factors[i], factors[j]);
      }
    }
    r.claim(om);
    r.claim(mm);
    r.claim(equality(c.g, "kernel = sum of its intersections with the simple ideals", perp, pieces));
    if (k.is_zero()) {
      r.claim(flag("omega(x,y) = kappa(a,[x,y]) on K for some a in K", true));
    } else {
      // Unknowns: coordinates of a in K; one equation per basis pair of K.
      const LieAlgebra ka = restrict_to(c.g, k);
      const RationalMatrix kappa = killing_form(ka);
      const RationalMatrix wk = restricted_gram(w, k);
      const std::size_t d = ka.dim();
      std::vector<Vector> rows;
      Vector rhs;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t jj = i + 1; jj < d; ++jj) {
          rows.push_back(kappa * ka.basis_bracket(i, jj));
          rhs.push_back(wk(i, jj));
        }
      }
      const auto sol = solve(RationalMatrix::from_rows(d, rows), rhs);
      r.claim(flag("omega(x,y) = kappa(a,[x,y]) on K for some a in K", sol.has_value(), "the linear system has no solution"));
      if (sol) {
        const Vector av = k.basis() * *sol;
        r.claim(equality(c.g, "kernel = Z_K(a)", perp, intersect(centralizer(c.g, Subspace::span(c.n, {av})), k)));
      }
    }
  }
  return r.finish();
}

VerifierReport verify_ZB_profile(const InstanceAnalysis& a) {
  Report r(a, "ZB_profile");
  const Ctx c(a);
  if (need_omega(r, c)) {
    hyp_claim(r, closed_claim(c.g, *a.instance.omega));
    r.hyp_verdict("omega is quasi-invariant", a.omega, true);
    hyp_claim(r, effective_claim(c.g, form_kernel(*a.instance.omega)));
  }
  if (r.met()) {
    r.claim(direct_product_claim(c));
    r.claim(vanishes(c.g, "N is abelian", c.br(c.nil(), c.nil())));
    r.claim(imaginary_type(c, "R acts on N by rotations", c.nil()));
    r.note("group-level claims (compact K with trivial center, connected H_K) are outside the Lie-algebra model");
  }
  return r.finish();
}

namespace {

VerifierReport verify_s_orthogonal(const InstanceAnalysis& a) {
  Report r(a, "S_orthogonal");
  const Ctx c(a);
  if (need_omega(r, c)) {
    r.hyp_verdict("omega is nil-invariant", a.omega, false);
    r.hyp("non-compact Levi part S known", c.levi.has_splitting && !c.levi.noncompact.is_zero(),
          c.levi.has_splitting ? "S = 0" : "no Levi splitting (source " + to_string(c.levi.source) + ")");
  }
  if (r.met()) {
    r.claim(inclusion(c.g, "ideal generated by S in kernel", ideal_generated(c.g, c.levi.noncompact),
                      form_kernel(*a.instance.omega)));
  }
  return r.finish();
}

VerifierReport verify_prolongation(const InstanceAnalysis& a) {
  Report r(a, "prolongation");
  const Ctx c(a);
  if (need_omega(r, c)) r.hyp_verdict("omega is quasi-invariant", a.omega, true);
  if (r.met()) {
    const Subspace nn = c.br(c.nil(), c.nil());
    r.claim(inclusion(c.g, "[g,[N,N]] in [N,N] and kernel", c.br(c.whole(), nn), intersect(nn, form_kernel(*a.instance.omega))));
  }
  return r.finish();
}

VerifierReport verify_lsym(const InstanceAnalysis& a) {
  Report r(a, "lsym");
  const Ctx c(a);
  if (need_omega(r, c)) r.hyp_verdict("omega is nil-invariant", a.omega, false);
  if (r.met()) {
    const Subspace perp = form_kernel(*a.instance.omega);
    Claim cl{"[[a,n],n'] - [n,[a,n']] in kernel", true, {}};
    const auto ns = c.nil().vectors();
    for (const auto& av : c.rad().vectors()) {
      for (const auto& x : ns) {
        for (const auto& y : ns) {
          const Vector v = c.g.bracket(c.g.bracket(av, x), y) - c.g.bracket(x, c.g.bracket(av, y));
          if (cl.holds && !perp.contains(v)) {
            cl = flag(cl.label, false, "a = " + format_vector(c.g, av) + ", n = " + format_vector(c.g, x) +
                                           ", n' = " + format_vector(c.g, y));
          }
        }
      }
    }
    r.claim(cl);
  }
  return r.finish();
}

void ideal_perp_claims(Report& r, const Ctx& c, const BilinearForm& f, const std::string& name) {
  const Subspace gb = skew_set(c.g, f);
  const Subspace perp = form_kernel(f);
  const std::vector<std::pair<std::string, Subspace>> candidates{
      {"largest ideal in g_beta", maximal_ideal_within(c.g, gb)},
      {"N", c.nil()},
      {"R", c.rad()},
      {"Z(g)", c.p.center},
      {"[g,g]", derived_algebra(c.g)},
  };
  for (const auto& [label, ideal] : candidates) {
    if (!gb.contains(ideal)) continue;
    r.claim(inclusion(c.g, name + ": [J^perp, J] in J and kernel for J = " + label,
                      c.br(orthogonal_complement(f, ideal), ideal), intersect(ideal, perp)));
  }
}

VerifierReport verify_ideal_perp(const InstanceAnalysis& a) {
  Report r(a, "ideal_perp");
  const Ctx c(a);
  r.hyp("some form supplied", a.instance.omega || a.instance.metric, "instance has no forms");
  if (r.met()) {
    if (a.instance.omega) ideal_perp_claims(r, c, *a.instance.omega, "omega");
    if (a.instance.metric) ideal_perp_claims(r, c, *a.instance.metric, "metric");
  }
  return r.finish();
}

VerifierReport verify_bgz(const InstanceAnalysis& a) {
  Report r(a, "bgz_invariance");
  const Ctx c(a);
  if (r.hyp("symmetric form metric supplied", a.instance.metric.has_value(), "instance has no metric")) {
    r.hyp_verdict("metric is nil-invariant", a.metric, false);
    r.hyp("Levi splitting known", c.levi.has_splitting, "source " + to_string(c.levi.source));
  }
  if (r.met()) {
    const BilinearForm& m = *a.instance.metric;
    const Subspace gs = c.levi.noncompact + c.rad();
    const auto basis = gs.vectors();
    Claim one{"restriction to g_s is ad(g)-invariant", true, {}};
    for (std::size_t x = 0; x < c.n && one.holds; ++x) {
      for (const auto& u : basis) {
        for (const auto& v : basis) {
          const Rational d = m(c.g.bracket(c.g.basis_vector(x), u), v) + m(u, c.g.bracket(c.g.basis_vector(x), v));
          if (one.holds && sgn(d) != 0) {
            one = flag(one.label, false, "x = " + c.g.labels()[x] + ", u = " + format_vector(c.g, u) + ", v = " +
                                             format_vector(c.g, v));
          }
        }
      }
    }
    r.claim(one);
    const Subspace skew = skew_set(c.g, m);
    r.claim(inclusion(c.g, "g_s acts skewly on the metric", gs, skew));
    const Subspace perp = form_kernel(m);
    if (effective_claim(c.g, perp).holds) {
      const Subspace zgs = center_of(c.g, gs);
      r.claim(inclusion(c.g, "kernel in K + Z(g_s)", perp, c.levi.compact + zgs));
      r.claim(inclusion(c.g, "[kernel, g_s] in Z(g_s) and kernel", c.br(perp, gs), intersect(zgs, perp)));
      if (skew.contains(perp)) r.claim(vanishes(c.g, "[kernel, g_s] = 0 when the kernel acts skewly", c.br(perp, gs)));
    } else {
      r.note("(g, metric) is not effective; the kernel claims are not evaluated");
    }
  }
  return r.finish();
}

VerifierReport verify_skew_invariant_abelian(const InstanceAnalysis& a) {
  Report r(a, "skew_invariant_abelian");
  const Ctx c(a);
  if (need_omega(r, c)) r.hyp("omega is invariant", a.omega->invariant, "some ad(x) is not skew");
  if (r.met()) {
    const Subspace perp = form_kernel(*a.instance.omega);
    r.claim(inclusion(c.g, "[g,g] in kernel", derived_algebra(c.g), perp));
    if (effective_claim(c.g, perp).holds) {
      r.claim(vanishes(c.g, "effective implies abelian", derived_algebra(c.g)));
      r.claim(vanishes(c.g, "effective implies nondegenerate", perp));
    }
  }
  return r.finish();
}

VerifierReport verify_skew_set_identities(const InstanceAnalysis& a) {
  Report r(a, "skew_set_identities");
  const Ctx c(a);
  if (need_omega(r, c)) {
    const BilinearForm& w = *a.instance.omega;
    const Subspace gw = skew_set(c.g, w);
    Claim prolo{"omega([x,y],z) = omega([z,y],x) for y in G_omega", true, {}};
    for (const auto& y : gw.vectors()) {
      for (std::size_t x = 0; x < c.n && prolo.holds; ++x) {
        for (std::size_t z = 0; z < c.n && prolo.holds; ++z) {
          const Vector ex = c.g.basis_vector(x);
          const Vector ez = c.g.basis_vector(z);
          if (w(c.g.bracket(ex, y), ez) != w(c.g.bracket(ez, y), ex)) {
            prolo = flag(prolo.label, false, "x = " + c.g.labels()[x] + ", y = " + format_vector(c.g, y) +
                                                 ", z = " + c.g.labels()[z]);
          }
        }
      }
    }
    r.claim(prolo);
    r.claim(orthogonality(c.g, w, "[G_omega,G_omega] orthogonal to G_omega", c.br(gw, gw), gw));
  }
  return r.finish();
}

VerifierReport verify_acis(const InstanceAnalysis& a) {
  Report r(a, "acis_image");
  const Ctx c(a);
  const bool w = a.omega && a.omega->quasi_invariant;
  const bool m = a.metric && a.metric->quasi_invariant;
  r.hyp("some supplied form is quasi-invariant", w || m, "no quasi-invariant form");
  if (r.met()) {
    if (w) {
      r.hyp_verdict("omega is quasi-invariant", a.omega, true);
      r.claim(flag("generators map g into G_omega", acis_image_check(*a.context, *a.instance.omega)));
    }
    if (m) {
      r.hyp_verdict("metric is quasi-invariant", a.metric, true);
      r.claim(flag("generators map g into G_metric", acis_image_check(*a.context, *a.instance.metric)));
    }
  }
  return r.finish();
}

std::string signature(const RationalMatrix& m) {
  const Inertia i = inertia(m);
  return "(" + std::to_string(i.positive) + "," + std::to_string(i.negative) + "," + std::to_string(i.zero) + ")";
}

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string observe_form(const InstanceAnalysis& a, const BilinearForm& f, const InvarianceVerdict& v,
                         const std::string& what) {
  const LieAlgebra& g = a.instance.algebra;
  if (what == "invariant") return boolean(v.invariant);
  if (what == "nil_invariant") return boolean(v.nil_invariant);
  if (what == "quasi_invariant") return boolean(v.quasi_invariant);
  if (what == "mode") return to_string(v.mode);
  if (what == "closed") return boolean(is_closed(g, f));
  if (what == "effective") return boolean(is_effective(g, f));
  if (what == "nondegenerate") return boolean(is_nondegenerate(f));
  if (what == "skew_set") return format_subspace(g, skew_set(g, f));
  if (what == "kernel") return format_subspace(g, form_kernel(f));
  if (what == "signature") return signature(f.gram());
  if (what == "quasi_witness") return v.witnesses.empty() ? "none" : v.witnesses.front().generator;
  throw Error("unknown observation '" + what + "'");
}

}  // namespace

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "unknown";
}

bool VerifierReport::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Claim& c) { return c.holds; });
}

ReportStatus VerifierReport::status() const {
  if (!hypotheses_met()) return ReportStatus::HypothesisNotMet;
  for (const auto& c : conclusions) {
    if (!c.holds) return ReportStatus::Fail;
  }
  return ReportStatus::Pass;
}

InstanceAnalysis analyze_instance(const Instance& instance) {
  InstanceAnalysis a;
  a.instance = instance;
  a.context = make_context(instance.algebra, instance.levi);
  if (instance.omega) a.omega = analyze_form(*a.context, *instance.omega);
  if (instance.metric) a.metric = analyze_form(*a.context, *instance.metric);
  return a;
}

const std::vector<TheoremInfo>& theorems() {
  static const std::vector<TheoremInfo> list{
      {"nil_skew", "nil-invariant effective omega: compact Levi type, N at most two-step, nilpotent g abelian", true,
       verify_nil_skew},
      {"skew_solvable", "quasi-invariant effective omega on K x R: N abelian and R of imaginary type", true,
       verify_skew_solvable},
      {"quasi_solv_abelian", "solvable g with quasi-invariant nondegenerate omega is abelian", true,
       verify_quasi_solv_abelian},
      {"radical_nilpotent", "nil-invariant effective h-structure: g = K x| N with K compact and N at most two-step", true,
       verify_radical_nilpotent},
      {"symplectic_structure", "closed nil-invariant omega: orthogonality relations, N abelian and g = K x R when effective",
       true, verify_symplectic_structure},
      {"metric_symplectic", "closed omega with a nil-invariant metric sharing its kernel: R abelian, kernel in K", true,
       verify_metric_symplectic},
      {"pk_orthogonality", "closed fundamental form on K x R: K, R and the simple ideals of K are orthogonal", true,
       verify_pk_orthogonality},
      {"ZB_profile", "closed quasi-invariant effective omega: g = K x R, N abelian, A acts by rotations", true,
       verify_ZB_profile},
      {"S_orthogonal", "nil-invariant omega: the ideal generated by a non-compact Levi part lies in the kernel", false,
       verify_s_orthogonal},
      {"prolongation", "quasi-invariant omega: [g,[N,N]] lies in [N,N] and the kernel", false, verify_prolongation},
      {"lsym", "nil-invariant omega: [[a,n],n'] - [n,[a,n']] lies in the kernel for a in R", false, verify_lsym},
      {"ideal_perp", "ideals J inside g_beta satisfy [J^perp, J] in J and the kernel", false, verify_ideal_perp},
      {"bgz_invariance", "nil-invariant symmetric forms are invariant along S x| R", false, verify_bgz},
      {"skew_invariant_abelian", "invariant omega has [g,g] in its kernel; effective implies abelian", false,
       verify_skew_invariant_abelian},
      {"skew_set_identities", "identities of omega on its skew set", false, verify_skew_set_identities},
      {"acis_image", "split and nilpotent generators map g into the skew set of a quasi-invariant form", false,
       verify_acis},
  };
  return list;
}

const TheoremInfo& find_theorem(const std::string& id) {
  for (const auto& t : theorems()) {
    if (t.id == id) return t;
  }
  throw UnknownTheorem("unknown theorem '" + id + "'");
}

VerifierReport verify(const std::string& id, const InstanceAnalysis& analysis) { return find_theorem(id).run(analysis); }

std::vector<VerifierReport> verify_all(const InstanceAnalysis& analysis, bool primary_only) {
  std::vector<VerifierReport> out;
  for (const auto& t : theorems()) {
    if (!primary_only || t.primary) out.push_back(t.run(analysis));
  }
  return out;
}

std::string observe(const InstanceAnalysis& a, const std::string& key) {
  const LieAlgebra& g = a.instance.algebra;
  const StructureProfile& p = a.context->profile;
  const auto dot = key.find('.');
  const std::string head = key.substr(0, dot);
  const std::string tail = dot == std::string::npos ? "" : key.substr(dot + 1);
  if (key == "analyze") return "ok";
  if (key == "algebra.abelian") return boolean(g.is_abelian());
  if (key == "center") return format_subspace(g, p.center);
  if (key == "nilradical") return format_subspace(g, p.nilradical);
  if (key == "radical") return format_subspace(g, p.solvable_radical);
  if (key == "nilradical.dim") return std::to_string(p.nilradical.dim());
  if (key == "radical.dim") return std::to_string(p.solvable_radical.dim());
  if (key == "killing") return to_string(p.killing_form);
  if (key == "killing.signature") return signature(p.killing_form);
  if (key == "compact_type") return boolean(is_compact_type(g));
  if (key == "levi.source") return to_string(a.context->levi.source);
  if (key == "lower_central_series" || key == "derived_series") {
    const auto& s = key == "derived_series" ? p.derived_series : p.lower_central_series;
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].dim());
    return out + ")";
  }
  if (key == "kernels_agree") {
    if (!a.instance.omega || !a.instance.metric) return "n/a";
    return boolean(form_kernel(*a.instance.omega) == form_kernel(*a.instance.metric));
  }
  if (head == "omega" && a.instance.omega) return observe_form(a, *a.instance.omega, *a.omega, tail);
  if (head == "metric" && a.instance.metric) return observe_form(a, *a.instance.metric, *a.metric, tail);
  if (head == "model" && a.instance.h) {
    const ModelReport m = validate_homogeneous_model(g, *a.instance.h);
    if (tail == "almost_h_algebra") return boolean(m.almost_h_algebra());
    if (tail == "h_algebra") return boolean(m.h_algebra());
  }
  if (head == "theorem") return to_string(verify(tail, a).status());
  if (head == "fitting" || head == "ad") {
    const std::string label = tail.substr(0, tail.find('.'));
    const auto idx = g.index_of(label);
    if (!idx) throw Error("unknown basis label in observation '" + key + "'");
    if (head == "fitting") {
      const FittingDecomposition f = fitting_decomposition(g.ad_basis(*idx));
      return "(" + format_subspace(g, Subspace(g.dim(), f.e0)) + "," + format_subspace(g, Subspace(g.dim(), f.e1)) + ")";
    }
    const OperatorDecomposition d = ad_jordan_parts(g, g.basis_vector(*idx));
    const std::string what = tail.substr(label.size() + 1);
    if (what == "real_split_zero") return boolean(d.real_split.is_zero());
    if (what == "real_split_is_ad") return boolean(d.real_split == g.ad_basis(*idx));
    if (what == "imaginary_is_ad") return boolean(d.imaginary == g.ad_basis(*idx));
  }
  throw Error("unknown observation '" + key + "'");
}

std::vector<Mismatch> expectation_mismatches(const CatalogEntry& entry) {
  std::vector<Mismatch> out;
  std::optional<InstanceAnalysis> a;
  std::string failure;
  try {
    a = analyze_instance(entry.instance);
  } catch (const UnsupportedEigenvalueField&) {
    failure = "unsupported-eigenvalue-field";
  }
  for (const auto& e : entry.expected) {
    std::string actual;
    if (!a) {
      actual = e.check == "analyze" ? failure : "not analyzable";
    } else {
      try {
        actual = observe(*a, e.check);
      } catch (const Error& err) {
        actual = std::string("error: ") + err.what();
      }
    }
    if (actual != e.value) out.push_back({e.check, e.value, actual});
  }
  return out;
}

} // namespace lieq
