#include "lieq/invariance.hpp"

#include "lieq/errors.hpp"

#include <deque>
#include <map>

namespace lieq {

namespace {

Integer squarefree_kernel(Integer n) {
  // n > 0; strips square factors by trial division
  Integer out = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return out * n;
}

// Sign of both roots of a factor with real roots: +1, -1, or 0 when mixed or zero.
int uniform_root_sign(const Polynomial& f) {
  if (f.degree() == 1) return sgn(-f.coefficient(0));
  const Rational p = f.coefficient(1);
  const Rational q = f.coefficient(0);
  if (sgn(q) <= 0) return 0;
  return sgn(p) < 0 ? 1 : -1;
}

class GeneratorCollector {
public:
  explicit GeneratorCollector(std::size_t n) : n_(n), span_(n * n) {}

  bool add(std::vector<Generator>& target, std::string description, const RationalMatrix& m) {
    if (m.is_zero()) return false;
    if (!span_.insert(m.flatten())) return false;
    target.push_back({std::move(description), m});
    return true;
  }

  std::size_t n() const { return n_; }

private:
  std::size_t n_;
  IncrementalSpan span_;
};

std::optional<Witness> first_defect(const BilinearForm& f, const Generator& gen) {
  const RationalMatrix d = skew_defect(f, gen.matrix);
  for (std::size_t y = 0; y < d.rows(); ++y)
    for (std::size_t z = 0; z < d.cols(); ++z)
      if (sgn(d(y, z)) != 0) return Witness{gen.description, y, z, d(y, z)};
  return std::nullopt;
}

} // namespace

OperatorDecomposition ad_jordan_parts(const LieAlgebra& g, const Vector& u) { return decompose(g.ad(u)); }

std::vector<RationalMatrix> split_replicas(const RationalMatrix& s) {
  const std::size_t n = s.rows();
  RationalMatrix rational_part(n, n);
  std::map<Integer, RationalMatrix> irrational;
  for (const auto& c : primary_components(s)) {
    const Polynomial& f = c.factor;
    if (f.degree() == 1) {
      rational_part += (-f.coefficient(0)) * c.projector;
      continue;
    }
    const Rational disc = quadratic_discriminant(f);
    if (sgn(disc) <= 0) throw InvalidStructure("replicas requested for an operator with non-real eigenvalues");
    const Rational centre = -f.coefficient(1) / 2;
    rational_part += centre * c.projector;
    const Integer cls = squarefree_kernel(disc.get_num() * disc.get_den());
    RationalMatrix part = s * c.projector - centre * c.projector;
    auto it = irrational.find(cls);
    if (it == irrational.end()) irrational.emplace(cls, std::move(part));
    else it->second += part;
  }
  std::vector<RationalMatrix> out;
  if (!rational_part.is_zero()) out.push_back(std::move(rational_part));
  for (auto& [cls, m] : irrational) out.push_back(std::move(m));
  return out;
}

std::vector<RationalMatrix> GeneratorSet::closure(bool include_split) const {
  std::vector<const RationalMatrix*> gens;
  for (const auto& x : nilpotent) gens.push_back(&x.matrix);
  if (include_split) {
    for (const auto& x : split) gens.push_back(&x.matrix);
  }
  if (gens.empty()) return {};
  const std::size_t n = gens.front()->rows();
  IncrementalSpan span(n * n);
  std::deque<RationalMatrix> queue;
  std::vector<RationalMatrix> basis;
  for (const auto* m : gens) {
    if (auto row = span.insert(m->flatten())) queue.push_back(RationalMatrix::unflatten(n, n, *row));
  }
  // Left-normed brackets of generators span the generated Lie algebra; the
  // span is bounded by n^2, so the loop stabilizes.
  while (!queue.empty()) {
    RationalMatrix b = std::move(queue.front());
    queue.pop_front();
    for (const auto* m : gens) {
      if (auto row = span.insert(commutator(b, *m).flatten())) queue.push_back(RationalMatrix::unflatten(n, n, *row));
    }
    basis.push_back(std::move(b));
    if (basis.size() > n * n) throw InvalidStructure("generator closure did not stabilize");
  }
  return basis;
}

GeneratorSet build_generator_set(const LieAlgebra& g, const StructureProfile& profile, const LeviResolution& levi) {
  const std::size_t n = g.dim();
  GeneratorSet gs;
  GeneratorCollector collect(n);
  const auto radical = profile.solvable_radical.vectors();

  std::vector<std::pair<std::string, OperatorDecomposition>> parts;
  auto jordan = [&](const std::string& name, const Vector& u) {
    try {
      return ad_jordan_parts(g, u);
    } catch (const UnsupportedEigenvalueField& e) {
      throw UnsupportedEigenvalueField("ad(" + name + "): " + e.what());
    }
  };
  for (std::size_t i = 0; i < n; ++i) parts.emplace_back(g.labels()[i], jordan(g.labels()[i], g.basis_vector(i)));
  for (std::size_t k = 0; k < radical.size(); ++k) {
    const std::string name = "r" + std::to_string(k + 1) + " = " + format_vector(g, radical[k]);
    parts.emplace_back(name, jordan(name, radical[k]));
  }

  for (const auto& [name, d] : parts) collect.add(gs.nilpotent, "phi_n(ad " + name + ")", d.nilpotent);
  for (const auto& v : profile.nilradical.vectors()) {
    if (collect.add(gs.nilpotent, "ad(" + format_vector(g, v) + ")", g.ad(v))) gs.nilpotent_elements.push_back(v);
  }
  // Eigenvectors of a split part s for eigenvalues of one sign have nilpotent
  // adjoints, since ad(y) shifts s-eigenvalues by a fixed sign.
  for (const auto& [name, d] : parts) {
    if (d.real_split.is_zero()) continue;
    std::vector<Vector> positive;
    std::vector<Vector> negative;
    for (const auto& c : primary_components(d.real_split)) {
      const int sign = uniform_root_sign(c.factor);
      if (sign == 0) continue;
      for (const auto& v : image(c.projector).columns()) (sign > 0 ? positive : negative).push_back(v);
    }
    for (const auto* side : {&positive, &negative}) {
      for (const auto& v : Subspace::span(n, *side).vectors()) {
        if (collect.add(gs.nilpotent, "ad(" + format_vector(g, v) + ") from phi_split(ad " + name + ")", g.ad(v))) {
          gs.nilpotent_elements.push_back(v);
        }
      }
    }
  }
  for (const auto& v : levi.nilpotents) {
    if (collect.add(gs.nilpotent, "ad(" + format_vector(g, v) + ") Levi nilpotent", g.ad(v))) {
      gs.nilpotent_elements.push_back(v);
    }
  }

  for (const auto& [name, d] : parts) {
    if (d.real_split.is_zero()) continue;
    const auto reps = split_replicas(d.real_split);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const std::string suffix = reps.size() == 1 ? "" : " replica " + std::to_string(k + 1);
      collect.add(gs.split, "phi_split(ad " + name + ")" + suffix, reps[k]);
    }
  }

  if (profile.levi_quotient_dim == 0 || profile.levi_quotient_compact) {
    gs.levi_complete = true;
  } else {
    const Subspace found = generated_subalgebra(g, gs.nilpotent_elements);
    const Quotient q = quotient(g, profile.solvable_radical);
    const Subspace img = apply(q.projection, found);
    if (is_ideal(q.algebra, img)) gs.levi_complete = is_compact_type(quotient(q.algebra, img).algebra);
  }
  return gs;
}

std::shared_ptr<const AlgebraContext> make_context(const LieAlgebra& g, const std::optional<LeviData>& levi) {
  g.require_valid();
  auto ctx = std::make_shared<AlgebraContext>();
  ctx->algebra = g;
  ctx->profile = structure_profile(g);
  ctx->levi = resolve_levi(g, ctx->profile, levi);
  ctx->generators = build_generator_set(g, ctx->profile, ctx->levi);
  return ctx;
}

std::string to_string(VerdictMode mode) { return mode == VerdictMode::Exact ? "exact" : "generator-approximation"; }

CheckResult nil_invariance_check(const AlgebraContext& ctx, const BilinearForm& f) {
  CheckResult r;
  for (const auto& gen : ctx.generators.nilpotent) {
    if (auto w = first_defect(f, gen)) {
      r.holds = false;
      r.witness = std::move(w);
      return r;
    }
  }
  r.conclusive = ctx.generators.levi_complete;
  return r;
}

CheckResult quasi_invariance_check(const AlgebraContext& ctx, const BilinearForm& f) {
  CheckResult r = nil_invariance_check(ctx, f);
  if (!r.holds) return r;
  for (const auto& gen : ctx.generators.split) {
    if (auto w = first_defect(f, gen)) {
      r.holds = false;
      r.conclusive = true;
      r.witness = std::move(w);
      return r;
    }
  }
  return r;
}

bool full_invariance_check(const LieAlgebra& g, const BilinearForm& f) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!is_skew_operator(f, g.ad_basis(i))) return false;
  }
  return true;
}

InvarianceVerdict analyze_form(const AlgebraContext& ctx, const BilinearForm& f) {
  InvarianceVerdict v;
  if (f.dim() != ctx.algebra.dim()) throw DimensionMismatch("form and algebra sizes differ");
  v.invariant = full_invariance_check(ctx.algebra, f);
  const CheckResult nil = nil_invariance_check(ctx, f);
  const CheckResult quasi = nil.holds ? quasi_invariance_check(ctx, f) : nil;
  v.nil_invariant = nil.holds;
  v.quasi_invariant = quasi.holds;
  v.nil_conclusive = nil.conclusive;
  v.quasi_conclusive = quasi.conclusive || (f.is_symmetric() && nil.conclusive);
  if (nil.witness) v.witnesses.push_back(*nil.witness);
  else if (quasi.witness) v.witnesses.push_back(*quasi.witness);
  if (v.invariant) {
    v.nil_invariant = v.quasi_invariant = true;
    v.nil_conclusive = v.quasi_conclusive = true;
  }
  v.mode = v.nil_conclusive && v.quasi_conclusive ? VerdictMode::Exact : VerdictMode::GeneratorApproximation;
  return v;
}

HInvarianceVerdict h_structure_invariance(const AlgebraContext& ctx, const HStructure& h) {
  HInvarianceVerdict v;
  v.metric = analyze_form(ctx, h.metric());
  v.omega = analyze_form(ctx, h.omega());
  v.nil_invariant = v.metric.nil_invariant && v.omega.nil_invariant;
  v.quasi_invariant = v.metric.quasi_invariant && v.omega.quasi_invariant;
  v.mode = v.metric.mode == VerdictMode::Exact && v.omega.mode == VerdictMode::Exact ? VerdictMode::Exact
                                                                                     : VerdictMode::GeneratorApproximation;
  return v;
}

bool acis_image_check(const AlgebraContext& ctx, const BilinearForm& f) {
  const Subspace skew = skew_set(ctx.algebra, f);
  for (const auto* family : {&ctx.generators.nilpotent, &ctx.generators.split}) {
    for (const auto& gen : *family) {
      for (std::size_t j = 0; j < ctx.algebra.dim(); ++j) {
        if (!skew.contains(gen.matrix.column(j))) return false;
      }
    }
  }
  return true;
}

} // namespace lieq
