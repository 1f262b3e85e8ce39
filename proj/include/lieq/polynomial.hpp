#pragma once

#include "lieq/matrix.hpp"
#include "lieq/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lieq {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// t - root
  static Polynomial linear(const Rational& root);
  /// t^k
  static Polynomial monomial(std::size_t k, const Rational& c = 1);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const;
  Rational coefficient(std::size_t k) const;
  Polynomial monic() const;
  Polynomial derivative() const;

  Rational operator()(const Rational& x) const;
  RationalMatrix operator()(const RationalMatrix& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& a);

/// Euclidean division; throws DimensionMismatch when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Product of the distinct monic irreducible factors.
Polynomial squarefree_part(const Polynomial& p);
bool is_squarefree(const Polynomial& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Factors a squarefree polynomial into monic irreducible factors of degree
/// one or two. Throws UnsupportedEigenvalueField when an irreducible factor of
/// higher degree remains.
std::vector<Polynomial> factor_low_degree(const Polynomial& p);

/// Discriminant p^2 - 4q of a monic quadratic t^2 + p t + q.
Rational quadratic_discriminant(const Polynomial& quadratic);

std::string to_string(const Polynomial& p);

} // namespace lieq
