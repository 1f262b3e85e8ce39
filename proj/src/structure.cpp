#include "lieq/structure.hpp"

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"

#include <algorithm>
#include <deque>

namespace lieq {

namespace {

RationalMatrix stack_rows(std::size_t cols, const std::vector<RationalMatrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  RationalMatrix m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return m;
}

Rational trace_of_product(const RationalMatrix& a, const RationalMatrix& b) {
  Rational t = 0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (sgn(a(p, q)) != 0 && sgn(b(q, p)) != 0) t += a(p, q) * b(q, p);
    }
  return t;
}

template <class Step>
std::vector<Subspace> stabilizing_series(const Subspace& start, Step step) {
  std::vector<Subspace> series{start};
  for (;;) {
    Subspace next = step(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

} // namespace

Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  const auto bv = b.vectors();
  for (const auto& x : a.vectors()) {
    const RationalMatrix adx = g.ad(x);
    for (const auto& y : bv) out.push_back(adx * y);
  }
  return Subspace::span(g.dim(), out);
}

Subspace derived_algebra(const LieAlgebra& g) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) out.push_back(g.basis_bracket(i, j));
  return Subspace::span(g.dim(), out);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_space(g, s, s)); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (const auto& v : s.vectors()) {
      if (!s.contains(g.ad_basis(i) * v)) return false;
    }
  }
  return true;
}

Subspace ideal_generated(const LieAlgebra& g, const Subspace& s) {
  Subspace current = s;
  for (;;) {
    Subspace next = current + bracket_space(g, Subspace::whole(g.dim()), current);
    if (next == current) return current;
    current = std::move(next);
  }
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  if (s.dim() == 0) return Subspace::whole(g.dim());
  std::vector<RationalMatrix> blocks;
  for (const auto& v : s.vectors()) blocks.push_back(g.ad(v));
  return Subspace(g.dim(), kernel(stack_rows(g.dim(), blocks)));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

Subspace normalizer(const LieAlgebra& g, const Subspace& s) {
  if (s.dim() == 0 || s.is_whole()) return Subspace::whole(g.dim());
  const RationalMatrix q = s.annihilator();
  std::vector<RationalMatrix> blocks;
  for (const auto& v : s.vectors()) blocks.push_back(q * g.ad(v));
  return Subspace(g.dim(), kernel(stack_rows(g.dim(), blocks)));
}

std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& s) {
  return stabilizing_series(s, [&](const Subspace& d) { return bracket_space(g, d, d); });
}

std::vector<Subspace> derived_series(const LieAlgebra& g) { return derived_series(g, Subspace::whole(g.dim())); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& s) {
  return stabilizing_series(s, [&](const Subspace& c) { return bracket_space(g, s, c); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  return lower_central_series(g, Subspace::whole(g.dim()));
}

bool is_solvable(const LieAlgebra& g, const Subspace& s) { return derived_series(g, s).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& g, const Subspace& s) { return lower_central_series(g, s).back().is_zero(); }
bool is_solvable(const LieAlgebra& g) { return is_solvable(g, Subspace::whole(g.dim())); }
bool is_nilpotent(const LieAlgebra& g) { return is_nilpotent(g, Subspace::whole(g.dim())); }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g, const Subspace& s) {
  const auto series = lower_central_series(g, s);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

bool is_abelian(const LieAlgebra& g, const Subspace& s) { return bracket_space(g, s, s).is_zero(); }

RationalMatrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RationalMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = trace_of_product(g.ad_basis(i), g.ad_basis(j));
      k(j, i) = k(i, j);
    }
  }
  return k;
}

bool is_semisimple(const LieAlgebra& g) {
  return g.dim() == 0 || sgn(determinant(killing_form(g))) != 0;
}

bool is_compact_type(const LieAlgebra& g) {
  if (g.dim() == 0) return true;
  const RationalMatrix k = killing_form(g);
  if (sgn(determinant(k)) == 0) throw NotSemisimple("Killing form is degenerate");
  return inertia(k).negative == g.dim();
}

Subspace solvable_radical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace d = derived_algebra(g);
  Subspace r = d.dim() == 0 ? Subspace::whole(n)
                            : Subspace(n, kernel(d.basis().transpose() * killing_form(g)));
  if (!is_ideal(g, r) || !is_solvable(g, r)) throw InvalidAlgebra("radical computation failed verification");
  return r;
}

Subspace nilradical(const LieAlgebra& g, const Subspace& radical) {
  const std::size_t n = g.dim();
  if (radical.dim() == 0) return Subspace::zero(n);
  std::vector<RationalMatrix> gens;
  for (const auto& r : radical.vectors()) gens.push_back(g.ad(r));

  // Unital associative envelope of ad(R), grown by right multiplication.
  IncrementalSpan span(n * n);
  std::deque<RationalMatrix> queue;
  queue.push_back(RationalMatrix::identity(n));
  span.insert(queue.back().flatten());
  std::vector<RationalMatrix> basis;
  while (!queue.empty()) {
    RationalMatrix b = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : gens) {
      if (auto row = span.insert((b * a).flatten())) queue.push_back(RationalMatrix::unflatten(n, n, *row));
    }
    basis.push_back(std::move(b));
  }

  RationalMatrix conditions(basis.size(), gens.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) conditions(i, j) = trace_of_product(gens[j], basis[i]);
  const RationalMatrix coeffs = kernel(conditions);
  Subspace nil = coeffs.cols() == 0 ? Subspace::zero(n) : Subspace(n, radical.basis() * coeffs);
  if (!is_ideal(g, nil) || !is_nilpotent(g, nil)) throw InvalidAlgebra("nilradical computation failed verification");
  return nil;
}

Subspace nilradical(const LieAlgebra& g) { return nilradical(g, solvable_radical(g)); }

Subspace maximal_ideal_within(const LieAlgebra& g, const Subspace& s) {
  Subspace j = s;
  for (;;) {
    Subspace next = j;
    for (std::size_t i = 0; i < g.dim() && next.dim() > 0; ++i) next = intersect(next, preimage(g.ad_basis(i), j));
    if (next == j) return j;
    j = std::move(next);
  }
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  const std::size_t n = g.dim();
  const Subspace c = standard_complement(ideal);
  const std::size_t m = c.dim();
  const RationalMatrix full = c.basis().hstack(ideal.basis());
  const RationalMatrix inv = inverse(full);
  RationalMatrix projection(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < n; ++k) projection(r, k) = inv(r, k);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back(g.labels()[c.pivot_rows()[a]]);
  LieAlgebra q(std::move(labels));
  const auto reps = c.vectors();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) q.set_bracket(a, b, projection * g.bracket(reps[a], reps[b]));
  return {std::move(q), std::move(projection), c.basis()};
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s) {
  const auto vs = s.vectors();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < vs.size(); ++a) labels.push_back("s" + std::to_string(a + 1));
  LieAlgebra h(std::move(labels));
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const Vector v = g.bracket(vs[a], vs[b]);
      if (!s.contains(v)) throw InvalidStructure("subspace is not a subalgebra");
      h.set_bracket(a, b, s.coordinates(v));
    }
  }
  return h;
}

std::vector<Subspace> simple_ideals(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n == 0) return {};
  if (!is_semisimple(g)) throw NotSemisimple("simple ideals of a non-semisimple algebra");

  // Centroid: X commuting with every ad(e_i); unknown X(p, r) sits at p * n + r.
  const std::size_t nn = n * n;
  RationalMatrix eqs(n * nn, nn);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix& a = g.ad_basis(i);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const std::size_t row = i * nn + p * n + q;
        for (std::size_t r = 0; r < n; ++r) {
          eqs(row, p * n + r) += a(r, q);
          eqs(row, r * n + q) -= a(p, r);
        }
      }
    }
  }
  const RationalMatrix centroid = kernel(eqs);

  std::vector<Subspace> pieces{Subspace::whole(n)};
  for (std::size_t b = 0; b < centroid.cols(); ++b) {
    const RationalMatrix x = RationalMatrix::unflatten(n, n, centroid.column(b));
    const auto factors = factor_low_degree(minimal_polynomial(x));
    std::vector<Subspace> refined;
    for (const auto& piece : pieces) {
      for (const auto& f : factors) {
        Subspace part = intersect(piece, Subspace(n, kernel(f(x))));
        if (part.dim() > 0) refined.push_back(std::move(part));
      }
    }
    pieces = std::move(refined);
  }
  for (const auto& p : pieces) {
    if (!is_ideal(g, p)) throw InvalidAlgebra("centroid decomposition produced a non-ideal");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Subspace& a, const Subspace& b) { return a.pivot_rows().front() < b.pivot_rows().front(); });
  return pieces;
}

StructureProfile structure_profile(const LieAlgebra& g) {
  StructureProfile p;
  p.solvable_radical = solvable_radical(g);
  p.nilradical = nilradical(g, p.solvable_radical);
  p.derived_series = derived_series(g);
  p.lower_central_series = lower_central_series(g);
  p.center = center(g);
  p.killing_form = killing_form(g);
  p.is_semisimple = g.dim() == 0 || sgn(determinant(p.killing_form)) != 0;
  p.is_solvable = p.derived_series.back().is_zero();
  p.is_nilpotent = p.lower_central_series.back().is_zero();
  if (p.is_nilpotent) p.nilpotency_class = p.lower_central_series.size() - 1;
  const Quotient q = quotient(g, p.solvable_radical);
  p.levi_quotient_dim = q.algebra.dim();
  p.levi_quotient_compact = is_compact_type(q.algebra);
  return p;
}

} // namespace lieq
