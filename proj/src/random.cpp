#include "lieq/random.hpp"

#include "lieq/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

namespace lieq {

namespace {

constexpr int kMaxAttempts = 32;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t salt) { return Rng(seed * kGolden ^ salt); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

/// Random integer combination of the columns of `basis`, never all-zero
/// coefficients when there is at least one column.
Vector random_combination(Rng& rng, const RationalMatrix& basis, int bound) {
  Vector coeffs(basis.cols());
  bool nonzero = false;
  while (!nonzero && basis.cols() > 0) {
    for (auto& c : coeffs) {
      c = uniform(rng, -bound, bound);
      nonzero = nonzero || sgn(c) != 0;
    }
  }
  return basis * coeffs;
}

/// Unit lower times unit upper triangular with small integer entries.
RationalMatrix random_unimodular(Rng& rng, std::size_t n) {
  RationalMatrix l = RationalMatrix::identity(n);
  RationalMatrix u = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = uniform(rng, -1, 1);
      u(j, i) = uniform(rng, -1, 1);
    }
  }
  return l * u;
}

void put_block(RationalMatrix& m, std::size_t at, const RationalMatrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) m(at + i, at + j) = block(i, j);
  }
}

/// Columns: for each i < j the coefficient vector of a 2-cocycle c(e_i, e_j).
RationalMatrix cocycle_space(const LieAlgebra& g) {
  const std::size_t m = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  auto index = [&](std::size_t a, std::size_t b) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin();
  };
  // c([e_i,e_j], e_k) expands over c(e_l, e_k) = +-t_{lk}.
  auto add = [&](Vector& row, const Vector& v, std::size_t k) {
    for (std::size_t l = 0; l < m; ++l) {
      if (sgn(v[l]) == 0 || l == k) continue;
      if (l < k) row[index(l, k)] += v[l];
      else row[index(k, l)] -= v[l];
    }
  };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        Vector row(pairs.size());
        add(row, g.basis_bracket(i, j), k);
        add(row, g.basis_bracket(j, k), i);
        add(row, g.basis_bracket(k, i), j);
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return RationalMatrix::identity(pairs.size());
  return kernel(RationalMatrix::from_rows(pairs.size(), rows));
}

LieAlgebra central_extension(const LieAlgebra& g, Rng& rng) {
  const std::size_t m = g.dim();
  LieAlgebra out(labels(m + 1));
  const Vector t = random_combination(rng, cocycle_space(g), 2);
  std::size_t p = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j, ++p) {
      Vector v = g.basis_bracket(i, j);
      v.push_back(t.empty() ? Rational(0) : t[p]);
      out.set_bracket(i, j, v);
    }
  }
  return out;
}

LieAlgebra nilpotent_algebra(std::size_t dim, Rng& rng) {
  if (dim == 0) return LieAlgebra::abelian(0);
  LieAlgebra g(labels(dim >= 2 && coin(rng) ? 2 : 1));
  while (g.dim() < dim) g = central_extension(g, rng);
  return g;
}

/// Basis of Der(n) as flattened m x m matrices in the columns.
RationalMatrix derivation_space(const LieAlgebra& n) {
  const std::size_t m = n.dim();
  std::vector<Vector> rows;
  auto d = [m](std::size_t r, std::size_t c) { return r * m + c; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        Vector row(m * m);
        for (std::size_t l = 0; l < m; ++l) {
          row[d(k, l)] += n.c(i, j, l);
          row[d(l, i)] -= n.c(l, j, k);
          row[d(l, j)] -= n.c(i, l, k);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return RationalMatrix::identity(m * m);
  return kernel(RationalMatrix::from_rows(m * m, rows));
}

/// span{a} + n with [a, x] = D x; a is the first basis vector.
LieAlgebra extend_by_derivation(const LieAlgebra& n, const RationalMatrix& d) {
  const std::size_t m = n.dim();
  LieAlgebra g(labels(m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    Vector v(m + 1);
    for (std::size_t i = 0; i < m; ++i) v[i + 1] = d(i, j);
    g.set_bracket(0, j + 1, v);
    for (std::size_t k = j + 1; k < m; ++k) {
      Vector w = n.basis_bracket(j, k);
      w.insert(w.begin(), Rational(0));
      g.set_bracket(j + 1, k + 1, w);
    }
  }
  return g;
}

LieAlgebra solvable_algebra(std::size_t dim, Rng& rng, std::uint64_t seed) {
  if (dim <= 1) return LieAlgebra(labels(dim));
  if (coin(rng)) {
    const PlantedOperator op = random_planted_operator(dim - 1, seed ^ rng());
    return extend_by_derivation(LieAlgebra(labels(dim - 1)), op.matrix);
  }
  const LieAlgebra n = nilpotent_algebra(dim - 1, rng);
  const Vector d = random_combination(rng, derivation_space(n), 2);
  return extend_by_derivation(n, RationalMatrix::unflatten(dim - 1, dim - 1, d));
}

using Rep = std::vector<RationalMatrix>;  // images of the three Levi basis vectors

Rep adjoint_rep(const LieAlgebra& s) { return {s.ad_basis(0), s.ad_basis(1), s.ad_basis(2)}; }

Rep trivial_rep() { return {RationalMatrix(1, 1), RationalMatrix(1, 1), RationalMatrix(1, 1)}; }

/// su(2) as imaginary quaternions acting on H by left multiplication, halved.
Rep quaternion_rep() {
  const Rational h(1, 2);
  RationalMatrix li{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  RationalMatrix lj{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
  RationalMatrix lk{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  return {h * li, h * lj, h * lk};
}

Rep standard_sl2_rep() {
  return {RationalMatrix{{1, 0}, {0, -1}}, RationalMatrix{{0, 1}, {0, 0}}, RationalMatrix{{0, 0}, {1, 0}}};
}

LieAlgebra su2_algebra() {
  LieAlgebra s(labels(3));
  s.set_bracket(0, 1, unit_vector(3, 2));
  s.set_bracket(1, 2, unit_vector(3, 0));
  s.set_bracket(2, 0, unit_vector(3, 1));
  return s;
}

LieAlgebra sl2_algebra() {
  LieAlgebra s(labels(3));
  s.set_bracket(0, 1, Rational(2) * unit_vector(3, 1));
  s.set_bracket(0, 2, Rational(-2) * unit_vector(3, 2));
  s.set_bracket(1, 2, unit_vector(3, 0));
  return s;
}

RandomAlgebra mixed_algebra(std::size_t dim, Rng& rng, std::uint64_t seed) {
  const bool compact = coin(rng);
  const LieAlgebra s = compact ? su2_algebra() : sl2_algebra();
  const std::size_t budget = dim - 3;
  const std::size_t vdim = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(budget)));
  std::vector<Rep> reps;
  std::size_t filled = 0;
  while (filled < vdim) {
    std::vector<Rep> options{trivial_rep(), adjoint_rep(s)};
    options.push_back(compact ? quaternion_rep() : standard_sl2_rep());
    std::erase_if(options, [&](const Rep& r) { return r[0].rows() > vdim - filled; });
    reps.push_back(options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))]);
    filled += reps.back()[0].rows();
  }
  const LieAlgebra r = solvable_algebra(budget - vdim, rng, seed);

  LieAlgebra g(labels(dim));
  auto embed = [&](const Vector& v, std::size_t offset) {
    Vector out(dim);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) g.set_bracket(i, j, embed(s.basis_bracket(i, j), 0));
  }
  std::size_t offset = 3;
  for (const auto& rep : reps) {
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t j = 0; j < rep[a].cols(); ++j) g.set_bracket(a, offset + j, embed(rep[a].column(j), offset));
    }
    offset += rep[0].rows();
  }
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = i + 1; j < r.dim(); ++j) g.set_bracket(offset + i, offset + j, embed(r.basis_bracket(i, j), offset));
  }

  LeviData levi;
  const Subspace sspan = Subspace::span(dim, {unit_vector(dim, 0), unit_vector(dim, 1), unit_vector(dim, 2)});
  if (compact) {
    levi.compact = sspan;
    levi.noncompact = Subspace::zero(dim);
  } else {
    levi.compact = Subspace::zero(dim);
    levi.noncompact = sspan;
    levi.nilpotents = {unit_vector(dim, 1), unit_vector(dim, 2)};
  }
  return {std::move(g), std::move(levi)};
}

RandomAlgebra attempt(const AlgebraProfile& p, std::uint64_t seed) {
  Rng rng = make_rng(seed, static_cast<std::uint64_t>(p.cls) + 1);
  switch (p.cls) {
    case AlgebraClass::Abelian: return {LieAlgebra(labels(p.dim)), std::nullopt};
    case AlgebraClass::Nilpotent: return {nilpotent_algebra(p.dim, rng), std::nullopt};
    case AlgebraClass::Solvable: return {solvable_algebra(p.dim, rng, seed), std::nullopt};
    case AlgebraClass::Mixed: return mixed_algebra(p.dim, rng, seed);
  }
  throw BadParameters("unknown algebra class");
}

std::vector<RationalMatrix> form_basis(std::size_t n, FormKind kind) {
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = kind == FormKind::Symmetric ? i : i + 1; j < n; ++j) {
      RationalMatrix m(n, n);
      m(i, j) = 1;
      m(j, i) = kind == FormKind::Symmetric ? 1 : -1;
      out.push_back(std::move(m));
    }
  }
  return out;
}

using Constraint = std::function<Vector(const RationalMatrix&)>;

/// Basis of the forms in span(basis) annihilated by every constraint.
std::vector<RationalMatrix> solution_space(const std::vector<RationalMatrix>& basis, const std::vector<Constraint>& constraints) {
  if (constraints.empty() || basis.empty()) return basis;
  std::vector<Vector> columns;
  for (const auto& b : basis) {
    Vector c;
    for (const auto& f : constraints) {
      const Vector part = f(b);
      c.insert(c.end(), part.begin(), part.end());
    }
    columns.push_back(std::move(c));
  }
  const RationalMatrix k = kernel(RationalMatrix::from_columns(columns.front().size(), columns));
  std::vector<RationalMatrix> out;
  for (const auto& coeffs : k.columns()) {
    RationalMatrix m(basis.front().rows(), basis.front().cols());
    for (std::size_t u = 0; u < basis.size(); ++u) {
      if (sgn(coeffs[u]) != 0) m += coeffs[u] * basis[u];
    }
    out.push_back(std::move(m));
  }
  return out;
}

Constraint skew_under(const RationalMatrix& phi) {
  return [phi](const RationalMatrix& b) { return (phi.transpose() * b + b * phi).flatten(); };
}

std::vector<RationalMatrix> operators_for(const AlgebraContext* ctx, const LieAlgebra& g, FormConstraint c) {
  std::vector<RationalMatrix> ops;
  if (c == FormConstraint::Invariant) {
    for (std::size_t i = 0; i < g.dim(); ++i) ops.push_back(g.ad_basis(i));
    return ops;
  }
  if (c == FormConstraint::None) return ops;
  for (const auto& gen : ctx->generators.nilpotent) ops.push_back(gen.matrix);
  if (c == FormConstraint::QuasiInvariant) {
    for (const auto& gen : ctx->generators.split) ops.push_back(gen.matrix);
  }
  return ops;
}

Constraint closedness(const LieAlgebra& g) {
  return [g](const RationalMatrix& b) {
    Vector out;
    const std::size_t n = g.dim();
    auto w = [&](const Vector& v, std::size_t k) {
      Rational s;
      for (std::size_t l = 0; l < n; ++l) s += v[l] * b(l, k);
      return s;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          out.push_back(w(g.basis_bracket(i, j), k) + w(g.basis_bracket(j, k), i) + w(g.basis_bracket(k, i), j));
        }
      }
    }
    return out;
  };
}

BilinearForm random_form_impl(const AlgebraContext* ctx, const LieAlgebra& g, FormKind kind, std::uint64_t seed,
                              const FormOptions& o) {
  const std::size_t n = g.dim();
  if (o.nondegenerate && kind == FormKind::Skew && n % 2 == 1) {
    throw GenerationFailed("no nondegenerate skew form exists in odd dimension " + std::to_string(n));
  }
  if (o.closed && kind != FormKind::Skew) throw GenerationFailed("closedness applies to skew forms only");
  std::vector<Constraint> constraints;
  for (const auto& phi : operators_for(ctx, g, o.constraint)) constraints.push_back(skew_under(phi));
  if (o.closed) constraints.push_back(closedness(g));
  const std::vector<RationalMatrix> space = solution_space(form_basis(n, kind), constraints);

  Rng rng = make_rng(seed, 0xF0 + static_cast<std::uint64_t>(kind));
  std::vector<Vector> cols;
  for (const auto& m : space) cols.push_back(m.flatten());
  const RationalMatrix flat = cols.empty() ? RationalMatrix(n * n, 0) : RationalMatrix::from_columns(n * n, cols);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Vector v = cols.empty() ? Vector(n * n) : random_combination(rng, flat, 3);
    BilinearForm f(kind, RationalMatrix::unflatten(n, n, v));
    if (!o.nondegenerate || is_nondegenerate(f)) return f;
  }
  throw GenerationFailed("no nondegenerate " + to_string(kind) + " form meets the constraints (" +
                         std::to_string(space.size()) + "-dimensional solution space)");
}

}  // namespace

std::string to_string(AlgebraClass cls) {
  switch (cls) {
    case AlgebraClass::Abelian: return "abelian";
    case AlgebraClass::Nilpotent: return "nilpotent";
    case AlgebraClass::Solvable: return "solvable";
    case AlgebraClass::Mixed: return "mixed";
  }
  return "unknown";
}

AlgebraClass parse_algebra_class(const std::string& text) {
  for (auto c : {AlgebraClass::Abelian, AlgebraClass::Nilpotent, AlgebraClass::Solvable, AlgebraClass::Mixed}) {
    if (to_string(c) == text) return c;
  }
  throw BadParameters("unknown algebra class '" + text + "'");
}

std::string to_string(FormConstraint constraint) {
  switch (constraint) {
    case FormConstraint::None: return "none";
    case FormConstraint::NilInvariant: return "nil-invariant";
    case FormConstraint::QuasiInvariant: return "quasi-invariant";
    case FormConstraint::Invariant: return "invariant";
  }
  return "unknown";
}

RandomAlgebra random_algebra(const AlgebraProfile& profile) {
  if (profile.dim > 12) throw BadParameters("random algebras are limited to dimension 12");
  if (profile.cls == AlgebraClass::Mixed && profile.dim < 3) throw BadParameters("mixed algebras need dimension >= 3");
  for (int k = 0; k < kMaxAttempts; ++k) {
    RandomAlgebra out = attempt(profile, profile.seed + static_cast<std::uint64_t>(k) * kGolden);
    out.algebra.require_valid();
    try {
      make_context(out.algebra, out.levi);
      return out;
    } catch (const UnsupportedEigenvalueField&) {
    }
  }
  throw GenerationFailed("no " + to_string(profile.cls) + " algebra of dimension " + std::to_string(profile.dim) +
                         " within the supported eigenvalue field");
}

BilinearForm random_form(const AlgebraContext& ctx, FormKind kind, std::uint64_t seed, const FormOptions& options) {
  return random_form_impl(&ctx, ctx.algebra, kind, seed, options);
}

BilinearForm random_form(const LieAlgebra& g, FormKind kind, std::uint64_t seed, const FormOptions& options) {
  const bool needs_context =
      options.constraint == FormConstraint::NilInvariant || options.constraint == FormConstraint::QuasiInvariant;
  if (!needs_context) return random_form_impl(nullptr, g, kind, seed, options);
  const auto ctx = make_context(g);
  return random_form_impl(ctx.get(), g, kind, seed, options);
}

std::optional<HStructure> random_h_structure(const AlgebraContext& ctx, std::uint64_t seed, FormConstraint constraint) {
  const LieAlgebra& g = ctx.algebra;
  const std::size_t n = g.dim();
  if (n == 0 || n % 2 == 1) return std::nullopt;
  RationalMatrix j(n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  std::vector<Constraint> constraints{[j](const RationalMatrix& b) { return (j.transpose() * b * j - b).flatten(); }};
  for (const auto& phi : operators_for(&ctx, g, constraint)) {
    constraints.push_back(skew_under(phi));
    constraints.push_back([phi, j](const RationalMatrix& b) {
      const RationalMatrix w = j.transpose() * b;
      return (phi.transpose() * w + w * phi).flatten();
    });
  }
  const auto space = solution_space(form_basis(n, FormKind::Symmetric), constraints);
  if (space.empty()) return std::nullopt;
  std::vector<Vector> cols;
  for (const auto& m : space) cols.push_back(m.flatten());
  const RationalMatrix flat = RationalMatrix::from_columns(n * n, cols);
  Rng rng = make_rng(seed, 0xA5);
  BilinearForm metric;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    metric = BilinearForm(FormKind::Symmetric, RationalMatrix::unflatten(n, n, random_combination(rng, flat, 3)));
    if (is_nondegenerate(metric)) break;
  }
  return HStructure(JStructure(j), metric);
}

PlantedOperator random_planted_operator(std::size_t dim, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0x51);
  RationalMatrix s(dim, dim), nil(dim, dim), imag(dim, dim), real(dim, dim);
  std::size_t pos = 0;
  while (pos < dim) {
    const std::size_t left = dim - pos;
    const int kind = left >= 2 ? uniform(rng, 0, 2) : 0;
    if (kind == 0) {
      const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(std::min<std::size_t>(3, left))));
      const Rational lambda = uniform(rng, -2, 2);
      for (std::size_t i = 0; i < k; ++i) {
        s(pos + i, pos + i) = lambda;
        real(pos + i, pos + i) = lambda;
        if (i + 1 < k) nil(pos + i, pos + i + 1) = 1;
      }
      pos += k;
    } else if (kind == 1) {
      const Rational p = uniform(rng, -2, 2);
      const Rational q = uniform(rng, 1, 3);
      const RationalMatrix rot{{0, -q}, {q, 0}};
      const RationalMatrix centre{{p, 0}, {0, p}};
      const std::size_t copies = left >= 4 && uniform(rng, 0, 2) == 0 ? 2 : 1;
      for (std::size_t c = 0; c < copies; ++c) {
        put_block(s, pos + 2 * c, rot + centre);
        put_block(imag, pos + 2 * c, rot);
        put_block(real, pos + 2 * c, centre);
      }
      if (copies == 2) put_block(nil, pos, RationalMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
      pos += 2 * copies;
    } else {
      static constexpr int kNonSquares[] = {2, 3, 5, 6, 7};
      const Rational c = uniform(rng, -2, 2);
      const Rational d = kNonSquares[uniform(rng, 0, 4)];
      const RationalMatrix block{{c, d}, {1, c}};
      put_block(s, pos, block);
      put_block(real, pos, block);
      pos += 2;
    }
  }
  const RationalMatrix p = random_unimodular(rng, dim);
  const RationalMatrix pi = inverse(p);
  auto conj = [&](const RationalMatrix& m) { return p * m * pi; };
  PlantedOperator out;
  out.parts = {conj(s), conj(nil), conj(imag), conj(real)};
  out.matrix = out.parts.semisimple + out.parts.nilpotent;
  return out;
}

Instance corpus_instance(std::uint64_t seed, std::size_t max_dim) {
  const auto cls = static_cast<AlgebraClass>(seed % 4);
  Rng rng = make_rng(seed, 0xC0);
  const int lo = cls == AlgebraClass::Mixed ? 3 : 2;
  const int hi = std::max(lo, static_cast<int>(max_dim));
  const auto dim = static_cast<std::size_t>(uniform(rng, lo, hi));
  RandomAlgebra ra = random_algebra({cls, dim, seed});
  const auto ctx = make_context(ra.algebra, ra.levi);

  Instance inst{"random-" + to_string(cls) + "-d" + std::to_string(dim) + "-s" + std::to_string(seed),
                ra.algebra, ra.levi, std::nullopt, std::nullopt, std::nullopt};
  const std::uint64_t variant = seed / 4;
  FormOptions omega_options;
  omega_options.constraint = std::array{FormConstraint::None, FormConstraint::NilInvariant,
                                        FormConstraint::QuasiInvariant, FormConstraint::NilInvariant}[variant % 4];
  omega_options.closed = variant % 4 == 3;
  FormOptions metric_options;
  metric_options.constraint = variant % 2 == 1 ? FormConstraint::NilInvariant : FormConstraint::None;
  try {
    inst.omega = random_form(*ctx, FormKind::Skew, seed, omega_options);
  } catch (const GenerationFailed&) {
    inst.omega = random_form(*ctx, FormKind::Skew, seed);
  }
  inst.metric = random_form(*ctx, FormKind::Symmetric, seed, metric_options);
  if (variant % 3 == 0) {
    if (auto h = random_h_structure(*ctx, seed, FormConstraint::NilInvariant)) attach(inst, std::move(*h));
  }
  return inst;
}

std::vector<Instance> random_corpus(std::size_t count, std::size_t max_dim, std::uint64_t first_seed) {
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(corpus_instance(first_seed + i, max_dim));
  return out;
}

} // namespace lieq
