// Acceptance run: one line per criterion, nonzero exit when any fails.

#include "lieq/catalog.hpp"
#include "lieq/errors.hpp"
#include "lieq/invariance.hpp"
#include "lieq/random.hpp"
#include "lieq/structure.hpp"
#include "lieq/theorems.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace lieq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Counter {
  bool ok = true;
  std::ostringstream first;
  void fail(const std::string& what) {
    if (ok) first << what;
    ok = false;
  }
};

Instance catalog_instance(const std::string& name, const std::map<std::string, int>& params = {}) {
  return catalog_get(name, params).instance;
}

std::vector<Instance> supported_catalog() {
  std::vector<Instance> out;
  for (const auto& e : catalog_all()) {
    try {
      make_context(e.instance.algebra, e.instance.levi);
      out.push_back(e.instance);
    } catch (const UnsupportedEigenvalueField&) {
    }
  }
  return out;
}

// Rank by plain Gaussian elimination, kept apart from the library routines.
std::size_t oracle_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational t = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= t * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Rational trace_product(const RationalMatrix& a, const RationalMatrix& b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  }
  return t;
}

Outcome example_fidelity() {
  Counter c;
  const Instance t = catalog_instance("two-dim-solvable");
  const InvarianceVerdict tv = analyze_form(*make_context(t.algebra), *t.omega);
  if (!(tv.nil_invariant && !tv.quasi_invariant && !tv.invariant)) c.fail("two-dim-solvable verdict");
  for (int n = 1; n <= 2; ++n) {
    const Instance g = catalog_instance("Gn", {{"n", n}});
    const InvarianceVerdict v = analyze_form(*make_context(g.algebra, g.levi), *g.omega);
    if (!is_nondegenerate(*g.omega)) c.fail("Gn(" + std::to_string(n) + ") degenerate");
    if (!v.nil_invariant || v.quasi_invariant) c.fail("Gn(" + std::to_string(n) + ") verdict");
    if (v.witnesses.empty() || v.witnesses[0].generator != "phi_split(ad a)") {
      c.fail("Gn(" + std::to_string(n) + ") witness");
    }
  }
  return {c.ok, c.ok ? "two-dim-solvable nil/not quasi/not invariant; Gn(1), Gn(2) witness phi_split(ad a)" : c.first.str()};
}

Outcome symmetric_equivalence() {
  Counter c;
  std::size_t nil = 0, solvable_nil = 0, exceptions = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto cls = static_cast<AlgebraClass>(seed % 4);
    const std::size_t lo = cls == AlgebraClass::Mixed ? 3 : 2;
    const std::size_t dim = lo + (seed / 4) % (9 - lo);
    try {
      const RandomAlgebra r = random_algebra({cls, dim, seed});
      const auto ctx = make_context(r.algebra, r.levi);
      FormOptions opts;
      if (seed % 2) opts.constraint = FormConstraint::NilInvariant;
      const BilinearForm f = random_form(*ctx, FormKind::Symmetric, seed, opts);
      const bool n = nil_invariance_check(*ctx, f).holds;
      const bool q = quasi_invariance_check(*ctx, f).holds;
      if (n != q) c.fail("seed " + std::to_string(seed) + ": nil != quasi");
      nil += n;
      if (n && is_solvable(r.algebra)) {
        ++solvable_nil;
        if (!full_invariance_check(r.algebra, f)) c.fail("seed " + std::to_string(seed) + ": solvable nil not invariant");
      }
    } catch (const Error& e) {
      ++exceptions;
      c.fail("seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  std::ostringstream d;
  d << "500 instances, " << nil << " nil-invariant, " << solvable_nil << " solvable nil-invariant, " << exceptions
    << " exceptions";
  if (!c.ok) d << "; first failure: " << c.first.str();
  return {c.ok, d.str()};
}

Outcome theorem_sweep() {
  std::vector<Instance> instances = random_corpus(500, 8, 0);
  for (auto& i : supported_catalog()) instances.push_back(std::move(i));
  std::size_t alerts = 0, flags = 0, met = 0;
  std::string first;
  for (const auto& inst : instances) {
    const InstanceAnalysis a = analyze_instance(inst);
    for (const auto& r : verify_all(a, true)) {
      met += r.hypotheses_met();
      flags += r.research_flags.size();
      if (!r.alerts.empty() && first.empty()) first = inst.name + " " + r.theorem + ": " + r.alerts[0];
      alerts += r.alerts.size();
    }
  }
  std::ostringstream d;
  d << instances.size() << " instances, " << met << " reports with hypotheses met, " << alerts << " alerts, " << flags
    << " research flags";
  if (!first.empty()) d << "; first alert: " << first;
  return {alerts == 0, d.str()};
}

Outcome decomposition_oracles() {
  Counter c;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t dim = 1 + seed % 8;
    const PlantedOperator p = random_planted_operator(dim, seed);
    const OperatorDecomposition d = decompose(p.matrix);
    const std::string at = "seed " + std::to_string(seed) + ": ";
    if (d.semisimple != p.parts.semisimple || d.nilpotent != p.parts.nilpotent || d.imaginary != p.parts.imaginary ||
        d.real_split != p.parts.real_split) {
      c.fail(at + "parts differ from the planted ones");
    }
    const auto v = decomposition_violations(p.matrix, d);
    if (!v.empty()) c.fail(at + v[0]);

    const FittingDecomposition f = fitting_decomposition(p.matrix);
    const Subspace e0 = Subspace(dim, f.e0);
    const Subspace e1 = Subspace(dim, f.e1);
    if (e0.dim() + e1.dim() != dim || !intersect(e0, e1).is_zero()) c.fail(at + "E0, E1 not complementary");
    if (apply(p.matrix, e1) != e1) c.fail(at + "not invertible on E1");
    if (!e0.contains(apply(p.matrix, e0))) c.fail(at + "E0 not invariant");
  }

  std::size_t pairs = 0;
  std::vector<Instance> instances = supported_catalog();
  for (std::uint64_t seed = 0; seed < 120; ++seed) instances.push_back(corpus_instance(seed, 8));
  for (const auto& inst : instances) {
    if (!inst.metric) continue;
    const LieAlgebra& g = inst.algebra;
    for (const auto& a : skew_set(g, *inst.metric).vectors()) {
      const FittingDecomposition f = fitting_decomposition(g.ad(a));
      ++pairs;
      if (!orthogonal(*inst.metric, Subspace(g.dim(), f.e0), Subspace(g.dim(), f.e1))) {
        c.fail(inst.name + ": E0 not orthogonal to E1");
      }
    }
  }
  std::ostringstream d;
  d << "200 planted operators, " << pairs << " skew ad(a) orthogonality checks";
  if (!c.ok) d << "; first failure: " << c.first.str();
  return {c.ok, d.str()};
}

Outcome brute_force_skew_sets() {
  Counter c;
  std::size_t checked = 0;
  std::vector<Instance> instances = supported_catalog();
  for (std::uint64_t seed = 0; seed < 500; ++seed) instances.push_back(corpus_instance(seed, 6));
  for (const auto& inst : instances) {
    const LieAlgebra& g = inst.algebra;
    const std::size_t n = g.dim();
    if (n > 6) continue;
    for (const auto* f : {&inst.omega, &inst.metric}) {
      if (!*f) continue;
      const BilinearForm& b = **f;
      // Row (j, k), column i: b([e_i,e_j], e_k) + b(e_j, [e_i,e_k]).
      std::vector<std::vector<Rational>> table;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> row(n);
          for (std::size_t i = 0; i < n; ++i) {
            row[i] = b(g.basis_bracket(i, j), g.basis_vector(k)) + b(g.basis_vector(j), g.basis_bracket(i, k));
          }
          table.push_back(row);
        }
      }
      const Subspace s = skew_set(g, b);
      ++checked;
      if (n - oracle_rank(table) != s.dim()) c.fail(inst.name + ": dimension differs");
      for (const auto& x : s.vectors()) {
        for (const auto& row : table) {
          Rational t = 0;
          for (std::size_t i = 0; i < n; ++i) t += row[i] * x[i];
          if (sgn(t) != 0) c.fail(inst.name + ": computed element fails a triple");
        }
      }
    }
  }
  std::ostringstream d;
  d << checked << " forms on algebras of dim <= 6";
  if (!c.ok) d << "; first failure: " << c.first.str();
  return {c.ok, d.str()};
}

// Nilpotent or solvable as an algebra, by iterated brackets inside s.
bool oracle_series_vanishes(const LieAlgebra& g, const Subspace& s, bool lower_central) {
  Subspace cur = s;
  for (std::size_t step = 0; step <= g.dim(); ++step) {
    if (cur.is_zero()) return true;
    std::vector<Vector> next;
    for (const auto& u : (lower_central ? s : cur).vectors()) {
      for (const auto& v : cur.vectors()) next.push_back(g.bracket(u, v));
    }
    cur = Subspace::span(g.dim(), next);
  }
  return cur.is_zero();
}

bool oracle_is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (const auto& v : s.vectors()) {
      if (!s.contains(g.bracket(g.basis_vector(i), v))) return false;
    }
  }
  return true;
}

Subspace oracle_ideal_generated(const LieAlgebra& g, Subspace s) {
  for (;;) {
    std::vector<Vector> vs = s.vectors();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      for (const auto& v : s.vectors()) vs.push_back(g.bracket(g.basis_vector(i), v));
    }
    Subspace next = Subspace::span(g.dim(), vs);
    if (next == s) return s;
    s = next;
  }
}

Outcome structural_oracles() {
  Counter c;
  std::size_t small = 0, probes = 0, killing = 0;
  std::vector<Instance> instances = supported_catalog();
  for (std::uint64_t seed = 0; seed < 500; ++seed) instances.push_back(corpus_instance(seed, 8));
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    const auto cls = static_cast<AlgebraClass>(seed % 4);
    Instance inst;
    inst.name = "grid-" + std::to_string(seed);
    inst.algebra = random_algebra({cls, (cls == AlgebraClass::Mixed ? 3 : 2) + seed % 2, seed}).algebra;
    instances.push_back(inst);
  }
  for (const auto& inst : instances) {
    const LieAlgebra& g = inst.algebra;
    const std::size_t n = g.dim();
    std::vector<RationalMatrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
    const RationalMatrix k = killing_form(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (k(i, j) != trace_product(ads[i], ads[j])) c.fail(inst.name + ": Killing entry");
        for (std::size_t l = 0; l < n; ++l) {
          const Vector ij = g.basis_bracket(i, j);
          const Vector jl = g.basis_bracket(j, l);
          Rational lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += ij[m] * k(m, l);
            rhs += k(i, m) * jl[m];
          }
          if (lhs != rhs) c.fail(inst.name + ": Killing form not associative");
        }
      }
    }
    ++killing;
    if (n > 4) continue;
    ++small;
    const Subspace nil = nilradical(g);
    const Subspace rad = solvable_radical(g);
    if (!oracle_is_ideal(g, nil) || !oracle_series_vanishes(g, nil, true)) c.fail(inst.name + ": nilradical");
    if (!oracle_is_ideal(g, rad) || !oracle_series_vanishes(g, rad, false)) c.fail(inst.name + ": radical");
    std::vector<int> digits(n, -1);
    for (;;) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = digits[i];
      ++probes;
      if (!nil.contains(v)) {
        std::vector<Vector> vs = nil.vectors();
        vs.push_back(v);
        if (oracle_series_vanishes(g, oracle_ideal_generated(g, Subspace::span(n, vs)), true)) {
          c.fail(inst.name + ": larger nilpotent ideal");
        }
      }
      if (!rad.contains(v)) {
        std::vector<Vector> vs = rad.vectors();
        vs.push_back(v);
        if (oracle_series_vanishes(g, oracle_ideal_generated(g, Subspace::span(n, vs)), false)) {
          c.fail(inst.name + ": larger solvable ideal");
        }
      }
      std::size_t i = 0;
      while (i < n && digits[i] == 1) digits[i++] = -1;
      if (i == n) break;
      ++digits[i];
    }
  }
  std::ostringstream d;
  d << small << " algebras of dim <= 4 with " << probes << " grid probes, Killing associativity on " << killing
    << " algebras";
  if (!c.ok) d << "; first failure: " << c.first.str();
  return {c.ok, d.str()};
}

Outcome negative_space() {
  Counter c;
  FormOptions nd;
  nd.nondegenerate = true;
  std::size_t odd = 0;
  std::vector<LieAlgebra> algebras{LieAlgebra::abelian(3), LieAlgebra::abelian(5),
                                   catalog_instance("heisenberg").algebra, catalog_instance("su2").algebra};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    algebras.push_back(random_algebra({static_cast<AlgebraClass>(seed % 4), 3 + 2 * (seed % 3), seed}).algebra);
  }
  for (const auto& g : algebras) {
    ++odd;
    try {
      random_form(g, FormKind::Skew, odd, nd);
      c.fail("nondegenerate skew form produced in dimension " + std::to_string(g.dim()));
    } catch (const GenerationFailed&) {
    }
  }

  const LieAlgebra h = catalog_instance("heisenberg").algebra;
  const auto ctx = make_context(h);
  std::size_t effective = 0, nil = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    FormOptions opts;
    if (seed % 2) opts.constraint = FormConstraint::NilInvariant;
    const BilinearForm w = random_form(*ctx, FormKind::Skew, seed, opts);
    const bool e = is_effective(h, w);
    const bool n = nil_invariance_check(*ctx, w).holds;
    effective += e;
    nil += n;
    if (e && n) c.fail("seed " + std::to_string(seed) + " effective and nil-invariant");
  }
  std::ostringstream d;
  d << odd << " odd-dimensional requests rejected; 1000 skew forms on H1: " << effective << " effective, " << nil
    << " nil-invariant, none both";
  if (!c.ok) d << "; first failure: " << c.first.str();
  return {c.ok, d.str()};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example fidelity", example_fidelity},
      {"symmetric nil/quasi equivalence", symmetric_equivalence},
      {"theorem sweeps without alerts", theorem_sweep},
      {"decomposition oracles", decomposition_oracles},
      {"brute-force skew sets", brute_force_skew_sets},
      {"structural oracles", structural_oracles},
      {"negative-space checks", negative_space},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s %zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
