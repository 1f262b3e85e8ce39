#pragma once

#include "lieq/matrix.hpp"
#include "lieq/polynomial.hpp"

#include <optional>
#include <vector>

namespace lieq {

/// Reduced row echelon form. Pivot columns are appended to `pivots` when given.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RationalMatrix& m);

/// Columns form a basis of the null space, one per free variable.
RationalMatrix kernel(const RationalMatrix& m);
/// Canonical basis of the column space (see canonical_basis).
RationalMatrix image(const RationalMatrix& m);
/// Reduced column-echelon basis of the span of the columns of m, with zero
/// columns dropped. Two spanning sets of one subspace give equal results.
RationalMatrix canonical_basis(const RationalMatrix& m);

/// Span grown one vector at a time; each stored row is reduced against the
/// earlier ones, so membership is a single elimination pass.
class IncrementalSpan {
public:
  explicit IncrementalSpan(std::size_t n) : n_(n) {}
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  /// Inserts v; returns the reduced new row, or nullopt if v was already in the span.
  std::optional<Vector> insert(const Vector& v);
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  Vector reduce(const Vector& v) const;
  const std::vector<Vector>& rows() const { return rows_; }

private:
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// Some x with a x = b, if any.
std::optional<Vector> solve(const RationalMatrix& a, const Vector& b);

Polynomial minimal_polynomial(const RationalMatrix& m);
Polynomial characteristic_polynomial(const RationalMatrix& m);
bool is_nilpotent(const RationalMatrix& m);

struct JordanChevalley {
  RationalMatrix semisimple;
  RationalMatrix nilpotent;
};

/// Newton iteration against the squarefree part of the minimal polynomial;
/// the semisimple part is a polynomial in m.
JordanChevalley jordan_chevalley(const RationalMatrix& m);

struct ImaginarySplit {
  RationalMatrix imaginary;
  RationalMatrix real_split;
};

/// Splits a semisimple operator along the primary components of its minimal
/// polynomial. Throws UnsupportedEigenvalueField for irreducible factors of
/// degree above two and InvalidStructure when the input is not semisimple.
ImaginarySplit split_imaginary_parts(const RationalMatrix& semisimple);

struct PrimaryComponent {
  Polynomial factor;         ///< monic irreducible factor of the minimal polynomial
  RationalMatrix projector;  ///< projection onto ker factor(s) along the other components
};

/// Primary decomposition of a semisimple operator over the low-degree factors
/// of its minimal polynomial. Same errors as split_imaginary_parts.
std::vector<PrimaryComponent> primary_components(const RationalMatrix& semisimple);

struct OperatorDecomposition {
  RationalMatrix semisimple;
  RationalMatrix nilpotent;
  RationalMatrix imaginary;
  RationalMatrix real_split;
};

OperatorDecomposition decompose(const RationalMatrix& m);

/// Names of the violated invariants; empty when all hold.
std::vector<std::string> decomposition_violations(const RationalMatrix& m, const OperatorDecomposition& d);

struct FittingDecomposition {
  RationalMatrix e0;  ///< kernel of m^n
  RationalMatrix e1;  ///< image of m^n
};

FittingDecomposition fitting_decomposition(const RationalMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Signature of a symmetric matrix by congruence diagonalization.
Inertia inertia(const RationalMatrix& symmetric);

} // namespace lieq
