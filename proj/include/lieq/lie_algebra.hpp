#pragma once

#include "lieq/matrix.hpp"
#include "lieq/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieq {

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::string message;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
class LieAlgebra {
public:
  LieAlgebra() = default;
  /// Zero brackets on the given basis.
  explicit LieAlgebra(std::vector<std::string> labels);
  static LieAlgebra abelian(std::size_t n, const std::string& prefix = "e");

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  /// Raw write, no antisymmetric completion; used to build broken inputs.
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  void set_bracket(const std::string& a, const std::string& b, const std::vector<std::pair<std::string, Rational>>& terms);

  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& u, const Vector& v) const;
  /// Matrix of v -> [e_i, v].
  const RationalMatrix& ad_basis(std::size_t i) const { return ad_.at(i); }
  RationalMatrix ad(const Vector& u) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  /// First antisymmetry or Jacobi violation, if any.
  std::optional<Violation> validate() const;
  /// Throws InvalidAlgebra on a violation.
  void require_valid() const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.c_ == b.c_;
  }

private:
  void rebuild_ad(std::size_t i);

  std::vector<std::string> labels_;
  std::vector<Rational> c_;
  std::vector<RationalMatrix> ad_;
};

/// Structure constants in a new basis: the columns of `change` express the new
/// basis vectors in the old basis.
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& change, std::vector<std::string> labels = {});
/// Direct product g x h, with h's basis appended after g's.
/// Linear combination of basis labels, e.g. "x - 1/2*z".
std::string format_vector(const LieAlgebra& g, const Vector& v);

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h);

} // namespace lieq
