#include "lieq/lie_algebra.hpp"

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"

namespace lieq {

LieAlgebra::LieAlgebra(std::vector<std::string> labels) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  c_.assign(n * n * n, Rational(0));
  ad_.assign(n, RationalMatrix(n, n));
}

LieAlgebra LieAlgebra::abelian(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return LieAlgebra(std::move(labels));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void LieAlgebra::rebuild_ad(std::size_t i) {
  const std::size_t n = dim();
  RationalMatrix& m = ad_[i];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c(i, j, k);
}

void LieAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) throw DimensionMismatch("structure constant index");
  c_[(i * n + j) * n + k] = value;
  rebuild_ad(i);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  const std::size_t n = dim();
  if (i >= n || j >= n || v.size() != n) throw DimensionMismatch("bracket assignment");
  if (i == j && !is_zero(v)) throw InvalidAlgebra("[x, x] must vanish");
  for (std::size_t k = 0; k < n; ++k) {
    c_[(i * n + j) * n + k] = v[k];
    c_[(j * n + i) * n + k] = -v[k];
  }
  rebuild_ad(i);
  rebuild_ad(j);
}

void LieAlgebra::set_bracket(const std::string& a, const std::string& b,
                             const std::vector<std::pair<std::string, Rational>>& terms) {
  const auto i = index_of(a);
  const auto j = index_of(b);
  if (!i || !j) throw InvalidAlgebra("unknown basis label in bracket [" + a + ", " + b + "]");
  Vector v = zero_vector(dim());
  for (const auto& [label, coeff] : terms) {
    const auto k = index_of(label);
    if (!k) throw InvalidAlgebra("unknown basis label " + label);
    v[*k] += coeff;
  }
  set_bracket(*i, *j, v);
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  return Vector(c_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                c_.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  return ad(u) * v;
}

RationalMatrix LieAlgebra::ad(const Vector& u) const {
  const std::size_t n = dim();
  if (u.size() != n) throw DimensionMismatch("adjoint of a vector of the wrong size");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    RationalMatrix t = ad_[i];
    t *= u[i];
    m += t;
  }
  return m;
}

std::optional<Violation> LieAlgebra::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) {
          return Violation{Violation::Kind::Antisymmetry, i, j, k,
                           "[" + labels_[i] + ", " + labels_[j] + "] != -[" + labels_[j] + ", " + labels_[i] + "]"};
        }
      }
    }
  }
  // [e_i, [e_j, e_k]] + [e_j, [e_k, e_i]] + [e_k, [e_i, e_j]]
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector s = ad_[i] * basis_bracket(j, k) + ad_[j] * basis_bracket(k, i) + ad_[k] * basis_bracket(i, j);
        if (!is_zero(s)) {
          return Violation{Violation::Kind::Jacobi, i, j, k,
                           "Jacobi identity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

void LieAlgebra::require_valid() const {
  if (auto v = validate()) throw InvalidAlgebra(v->message);
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& change, std::vector<std::string> labels) {
  const std::size_t n = g.dim();
  if (change.rows() != n || change.cols() != n) throw DimensionMismatch("basis change");
  const RationalMatrix inv = inverse(change);
  if (labels.empty()) labels = g.labels();
  LieAlgebra h(std::move(labels));
  const auto cols = change.columns();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) h.set_bracket(i, j, inv * g.bracket(cols[i], cols[j]));
  return h;
}

std::string format_vector(const LieAlgebra& g, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!out.empty()) out += sgn(v[i]) > 0 ? " + " : " - ";
    else if (sgn(v[i]) < 0) out += "-";
    const Rational a = abs(v[i]);
    if (a != 1) out += to_string(a) + "*";
    out += g.labels()[i];
  }
  return out.empty() ? "0" : out;
}

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h) {
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  const std::size_t n = g.dim();
  const std::size_t m = h.dim();
  LieAlgebra p(std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = g.basis_bracket(i, j);
      v.resize(n + m, Rational(0));
      p.set_bracket(i, j, v);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v(n, Rational(0));
      const Vector w = h.basis_bracket(i, j);
      v.insert(v.end(), w.begin(), w.end());
      p.set_bracket(n + i, n + j, v);
    }
  }
  return p;
}

} // namespace lieq
