#include "lieq/linalg.hpp"

#include "lieq/errors.hpp"

#include <utility>

namespace lieq {

RationalMatrix rref(const RationalMatrix& input, std::vector<std::size_t>* pivots) {
  RationalMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(lead, j));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(lead, j)) != 0) m(r, j) -= f * m(lead, j);
      }
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

RationalMatrix kernel(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(m, &pivots);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return RationalMatrix::from_columns(n, basis);
}

RationalMatrix canonical_basis(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(m.transpose(), &pivots);
  RationalMatrix out(m.rows(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out(j, i) = r(i, j);
  return out;
}

RationalMatrix image(const RationalMatrix& m) { return canonical_basis(m); }

Vector IncrementalSpan::reduce(const Vector& v) const {
  if (v.size() != n_) throw DimensionMismatch("span membership");
  Vector w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    const Vector& r = rows_[i];
    for (std::size_t k = pivots_[i]; k < n_; ++k) {
      if (sgn(r[k]) != 0) w[k] -= f * r[k];
    }
  }
  return w;
}

std::optional<Vector> IncrementalSpan::insert(const Vector& v) {
  Vector w = reduce(v);
  std::size_t p = 0;
  while (p < n_ && sgn(w[p]) == 0) ++p;
  if (p == n_) return std::nullopt;
  const Rational inv = 1 / w[p];
  for (std::size_t k = p; k < n_; ++k) w[k] *= inv;
  rows_.push_back(w);
  pivots_.push_back(p);
  return w;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(m.hstack(RationalMatrix::identity(n)), &pivots);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw SingularMatrix("matrix is singular");
  return r.column_block(n, n);
}

Rational determinant(const RationalMatrix& input) {
  if (!input.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Vector> solve(const RationalMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve right-hand side");
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(a.hstack(RationalMatrix::from_columns(a.rows(), {b})), &pivots);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, n);
  return x;
}

namespace {

// Monic generator of the annihilator of v under m.
Polynomial vector_minimal_polynomial(const RationalMatrix& m, const Vector& v) {
  std::vector<Vector> krylov{v};
  for (;;) {
    Vector next = m * krylov.back();
    const RationalMatrix k = RationalMatrix::from_columns(m.rows(), krylov);
    if (auto x = solve(k, next)) {
      std::vector<Rational> c(krylov.size() + 1);
      for (std::size_t i = 0; i < krylov.size(); ++i) c[i] = -(*x)[i];
      c.back() = 1;
      return Polynomial(std::move(c));
    }
    krylov.push_back(std::move(next));
  }
}

} // namespace

Polynomial minimal_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Polynomial p = Polynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(p.degree()) == n) break;
    const Vector e = unit_vector(n, i);
    if (is_zero(p(m) * e)) continue;
    p = lcm(p, vector_minimal_polynomial(m, e));
  }
  return p;
}

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(a * mk).trace() / static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(c));
}

bool is_nilpotent(const RationalMatrix& m) { return power(m, m.rows()).is_zero(); }

JordanChevalley jordan_chevalley(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("Jordan decomposition of non-square matrix");
  const Polynomial q = squarefree_part(minimal_polynomial(m));
  const Polynomial dq = q.derivative();
  RationalMatrix a = m;
  for (;;) {
    const RationalMatrix qa = q(a);
    if (qa.is_zero()) break;
    a -= qa * inverse(dq(a));
  }
  return {a, m - a};
}

std::vector<PrimaryComponent> primary_components(const RationalMatrix& s) {
  if (!s.is_square()) throw DimensionMismatch("primary decomposition of non-square matrix");
  const std::size_t n = s.rows();
  if (n == 0) return {};
  const Polynomial p = minimal_polynomial(s);
  if (!is_squarefree(p)) throw InvalidStructure("operator is not semisimple");
  const auto factors = factor_low_degree(p);

  std::vector<Vector> basis;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (const auto& f : factors) {
    const RationalMatrix k = kernel(f(s));
    blocks.emplace_back(basis.size(), k.cols());
    for (std::size_t c = 0; c < k.cols(); ++c) basis.push_back(k.column(c));
  }
  const RationalMatrix b = RationalMatrix::from_columns(n, basis);
  const RationalMatrix binv = inverse(b);
  std::vector<PrimaryComponent> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto [start, size] = blocks[i];
    RationalMatrix e(n, n);
    for (std::size_t r = start; r < start + size; ++r) e(r, r) = 1;
    out.push_back({factors[i], b * e * binv});
  }
  return out;
}

ImaginarySplit split_imaginary_parts(const RationalMatrix& s) {
  if (!s.is_square()) throw DimensionMismatch("split of non-square matrix");
  const std::size_t n = s.rows();
  RationalMatrix real_split(n, n);
  for (const auto& c : primary_components(s)) {
    const Polynomial& f = c.factor;
    if (f.degree() == 1) {
      real_split += (-f.coefficient(0)) * c.projector;
    } else if (sgn(quadratic_discriminant(f)) < 0) {
      real_split += (-f.coefficient(1) / 2) * c.projector;
    } else {
      real_split += s * c.projector;
    }
  }
  return {s - real_split, std::move(real_split)};
}

OperatorDecomposition decompose(const RationalMatrix& m) {
  auto jc = jordan_chevalley(m);
  auto split = split_imaginary_parts(jc.semisimple);
  return {std::move(jc.semisimple), std::move(jc.nilpotent), std::move(split.imaginary), std::move(split.real_split)};
}

std::vector<std::string> decomposition_violations(const RationalMatrix& m, const OperatorDecomposition& d) {
  std::vector<std::string> out;
  if (d.semisimple + d.nilpotent != m) out.emplace_back("semisimple + nilpotent != operator");
  if (!commutator(d.semisimple, d.nilpotent).is_zero()) out.emplace_back("semisimple and nilpotent do not commute");
  if (!is_nilpotent(d.nilpotent)) out.emplace_back("nilpotent part is not nilpotent");
  if (!is_squarefree(minimal_polynomial(d.semisimple))) out.emplace_back("semisimple part has repeated factors");
  if (d.imaginary + d.real_split != d.semisimple) out.emplace_back("imaginary + real split != semisimple");
  if (!commutator(d.imaginary, d.real_split).is_zero()) out.emplace_back("imaginary and real split do not commute");

  const Polynomial pr = minimal_polynomial(d.real_split);
  if (!is_squarefree(pr)) out.emplace_back("real split part is not semisimple");
  for (const auto& f : factor_low_degree(pr)) {
    if (f.degree() == 2 && sgn(quadratic_discriminant(f)) <= 0) {
      out.emplace_back("real split part has a non-real eigenvalue");
    }
  }
  const Polynomial pi = minimal_polynomial(d.imaginary);
  if (!is_squarefree(pi)) out.emplace_back("imaginary part is not semisimple");
  for (const auto& f : factor_low_degree(pi)) {
    const bool zero_root = f.degree() == 1 && sgn(f.coefficient(0)) == 0;
    const bool pure_imaginary = f.degree() == 2 && sgn(f.coefficient(1)) == 0 && sgn(f.coefficient(0)) > 0;
    if (!zero_root && !pure_imaginary) out.emplace_back("imaginary part has an eigenvalue off the imaginary axis");
  }
  return out;
}

FittingDecomposition fitting_decomposition(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("Fitting decomposition of non-square matrix");
  const RationalMatrix p = power(m, m.rows());
  return {canonical_basis(kernel(p)), image(p)};
}

Inertia inertia(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DimensionMismatch("inertia of a non-symmetric matrix");
  RationalMatrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia result;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a(i, i)) == 0) {
      std::size_t j = i + 1;
      while (j < n && sgn(a(j, j)) == 0) ++j;
      if (j < n) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
      } else {
        j = i + 1;
        while (j < n && sgn(a(i, j)) == 0) ++j;
        if (j < n) {
          // e_i + e_j has value 2 a(i,j) != 0
          for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
          for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
        }
      }
    }
    const Rational pivot = a(i, i);
    if (sgn(pivot) == 0) {
      ++result.zero;
      continue;
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      if (sgn(a(k, i)) == 0) continue;
      const Rational f = a(k, i) / pivot;
      for (std::size_t c = 0; c < n; ++c) a(k, c) -= f * a(i, c);
      for (std::size_t r = 0; r < n; ++r) a(r, k) -= f * a(r, i);
    }
    if (sgn(pivot) > 0) ++result.positive;
    else ++result.negative;
  }
  return result;
}

} // namespace lieq
