#pragma once

#include "lieq/matrix.hpp"

#include <string>
#include <vector>

namespace lieq {

/// Linear subspace of Q^n held by a canonical (reduced column-echelon) basis,
/// so equal subspaces compare equal.
class Subspace {
public:
  Subspace() = default;
  /// Span of the columns of `spanning`, which need not be independent.
  Subspace(std::size_t ambient_dim, const RationalMatrix& spanning);

  static Subspace zero(std::size_t n);
  static Subspace whole(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }
  const RationalMatrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const { return basis_.columns(); }
  /// Row of the leading one in each basis column.
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Rows whose joint kernel is this subspace (an annihilator basis).
  RationalMatrix annihilator() const;
  /// Coordinates of v relative to basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of a subspace under a linear map.
Subspace apply(const RationalMatrix& m, const Subspace& s);
/// {v : m v in s}
Subspace preimage(const RationalMatrix& m, const Subspace& s);
/// Standard basis vectors at the non-pivot rows of s; together with s they
/// span the whole space.
Subspace standard_complement(const Subspace& s);

std::string to_string(const Subspace& s);

} // namespace lieq
