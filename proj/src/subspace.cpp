#include "lieq/subspace.hpp"

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"

#include <sstream>

namespace lieq {

Subspace::Subspace(std::size_t ambient_dim, const RationalMatrix& spanning) : ambient_(ambient_dim) {
  if (spanning.cols() == 0) {
    basis_ = RationalMatrix(ambient_dim, 0);
    return;
  }
  if (spanning.rows() != ambient_dim) throw DimensionMismatch("subspace spanning set");
  basis_ = canonical_basis(spanning);
  for (std::size_t c = 0; c < basis_.cols(); ++c) {
    std::size_t r = 0;
    while (sgn(basis_(r, c)) == 0) ++r;
    pivots_.push_back(r);
  }
}

Subspace Subspace::zero(std::size_t n) { return Subspace(n, RationalMatrix(n, 0)); }

Subspace Subspace::whole(std::size_t n) { return Subspace(n, RationalMatrix::identity(n)); }

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
  return Subspace(n, RationalMatrix::from_columns(n, vectors));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("membership test");
  if (lieq::is_zero(v)) return true;
  if (dim() == 0) return false;
  // The basis is column-echelon: the pivot rows determine the coordinates.
  Vector w = v;
  for (std::size_t c = 0; c < dim(); ++c) {
    const Rational coeff = w[pivots_[c]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t r = 0; r < ambient_; ++r) w[r] -= coeff * basis_(r, c);
  }
  return lieq::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace inclusion");
  for (std::size_t c = 0; c < other.dim(); ++c) {
    if (!contains(other.basis_.column(c))) return false;
  }
  return true;
}

RationalMatrix Subspace::annihilator() const {
  if (dim() == 0) return RationalMatrix::identity(ambient_);
  return kernel(basis_.transpose()).transpose();
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DimensionMismatch("vector outside the subspace");
  Vector x(dim());
  for (std::size_t c = 0; c < dim(); ++c) x[c] = v[pivots_[c]];
  return x;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum");
  return Subspace(a.ambient_dim(), a.basis().hstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace intersection");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  const RationalMatrix k = kernel(a.basis().hstack(-b.basis()));
  RationalMatrix coeffs(a.dim(), k.cols());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < k.cols(); ++c) coeffs(r, c) = k(r, c);
  return Subspace(n, a.basis() * coeffs);
}

Subspace apply(const RationalMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("subspace image");
  if (s.dim() == 0) return Subspace::zero(m.rows());
  return Subspace(m.rows(), m * s.basis());
}

Subspace preimage(const RationalMatrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw DimensionMismatch("subspace preimage");
  return Subspace(m.cols(), kernel(s.annihilator() * m));
}

Subspace standard_complement(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  std::vector<bool> used(n, false);
  for (auto p : s.pivot_rows()) used[p] = true;
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) vs.push_back(unit_vector(n, i));
  }
  return Subspace::span(n, vs);
}

std::string to_string(const Subspace& s) {
  std::ostringstream os;
  os << "span{";
  for (std::size_t c = 0; c < s.dim(); ++c) {
    if (c) os << ", ";
    os << '(';
    for (std::size_t r = 0; r < s.ambient_dim(); ++r) {
      if (r) os << ' ';
      os << to_string(s.basis()(r, c));
    }
    os << ')';
  }
  os << '}';
  return os.str();
}

} // namespace lieq
