#pragma once

#include "lieq/lie_algebra.hpp"
#include "lieq/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lieq {

enum class FormKind { Symmetric, Skew };

std::string to_string(FormKind kind);
FormKind parse_form_kind(const std::string& text);

/// Bilinear form beta(u, v) = u^T G v.
class BilinearForm {
public:
  BilinearForm() = default;
  /// Throws InvalidStructure if the Gram matrix does not match the kind.
  BilinearForm(FormKind kind, RationalMatrix gram);
  static BilinearForm zero(FormKind kind, std::size_t n) { return {kind, RationalMatrix(n, n)}; }

  FormKind kind() const { return kind_; }
  bool is_symmetric() const { return kind_ == FormKind::Symmetric; }
  const RationalMatrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  Rational operator()(const Vector& u, const Vector& v) const;
  const Rational& at(std::size_t i, std::size_t j) const { return gram_(i, j); }

private:
  FormKind kind_ = FormKind::Symmetric;
  RationalMatrix gram_;
};

/// phi^T G + G phi = 0
bool is_skew_operator(const BilinearForm& f, const RationalMatrix& phi);
/// Entries of phi^T G + G phi; zero iff phi is skew.
RationalMatrix skew_defect(const BilinearForm& f, const RationalMatrix& phi);

Subspace form_kernel(const BilinearForm& f);
bool is_nondegenerate(const BilinearForm& f);
/// {v : f(v, s) = 0 for all s in S}
Subspace orthogonal_complement(const BilinearForm& f, const Subspace& s);
/// f(a, b) = 0 for all a in A, b in B
bool orthogonal(const BilinearForm& f, const Subspace& a, const Subspace& b);
/// Gram matrix of f on the basis of s.
RationalMatrix restricted_gram(const BilinearForm& f, const Subspace& s);

/// The subalgebra of f-skew elements {x : ad(x) is f-skew}.
Subspace skew_set(const LieAlgebra& g, const BilinearForm& f);

/// Basis triple (i, j, k) with i < j < k on which the cyclic sum
/// f([x,y],z) + f([y,z],x) + f([z,x],y) does not vanish.
std::optional<std::array<std::size_t, 3>> closedness_violation(const LieAlgebra& g, const BilinearForm& f);
/// Throws InvalidStructure for symmetric forms.
bool is_closed(const LieAlgebra& g, const BilinearForm& f);

/// The kernel of f contains no nonzero ideal.
bool is_effective(const LieAlgebra& g, const BilinearForm& f);

/// Endomorphism with J^3 = -J (so J^2 = -1 modulo ker J) and V = ker J + im J.
class JStructure {
public:
  JStructure() = default;
  /// Throws InvalidStructure when the conditions fail.
  explicit JStructure(RationalMatrix matrix);
  const RationalMatrix& matrix() const { return j_; }
  std::size_t dim() const { return j_.rows(); }
  Subspace kernel() const;

private:
  RationalMatrix j_;
};

/// A J-structure with a J-invariant symmetric form whose kernel contains ker J,
/// plus the fundamental two-form omega(u, v) = <Ju, v>.
class HStructure {
public:
  HStructure() = default;
  /// Throws InvalidStructure when an h-structure condition fails.
  HStructure(JStructure j, BilinearForm metric);
  const JStructure& j() const { return j_; }
  const BilinearForm& metric() const { return metric_; }
  const BilinearForm& omega() const { return omega_; }
  std::size_t dim() const { return j_.dim(); }
  /// G^perp, the common kernel of the metric and omega.
  const Subspace& kernel() const { return kernel_; }
  bool is_nondegenerate() const { return kernel_.is_zero(); }

private:
  JStructure j_;
  BilinearForm metric_;
  BilinearForm omega_;
  Subspace kernel_;
};

/// {x : ad(x) H in H and ad(x) J = J ad(x) mod H}, with H = ker J.
Subspace g_J(const LieAlgebra& g, const JStructure& j);
/// As g_J with H replaced by the kernel of the h-structure.
Subspace g_J_h(const LieAlgebra& g, const HStructure& h);
/// Elements skew for both the metric and omega.
Subspace g_h(const LieAlgebra& g, const HStructure& h);
/// Metric-skew elements of g_J.
Subspace g_metric_J(const LieAlgebra& g, const HStructure& h);

/// Basis of the metric-skew J-linear maps. Throws DegenerateHStructure unless
/// the metric is nondegenerate.
std::vector<RationalMatrix> unitary_algebra(const HStructure& h);
/// U(V) meets J O(V) only in zero.
bool unitary_is_totally_real(const HStructure& h);

struct ConditionViolation {
  std::string condition;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string detail;
};

/// Conditions of the homogeneous almost h-algebra model with kernel
/// H = G^perp. The integrability condition is reported apart from the rest.
struct ModelReport {
  bool j1 = true;              ///< J H = 0
  bool j2 = true;              ///< J^2 = -1 mod H
  bool metric_invariant = true;  ///< <Jx, Jy> = <x, y>
  bool kernels_agree = true;   ///< H = ker <,> = ker omega = ker J
  bool subalgebra = true;      ///< H is a subalgebra
  bool kernel_skew = true;     ///< H inside the metric-skew J-linear elements
  bool integrable = true;      ///< [Jx,Jy] - [x,y] - J[x,Jy] - J[Jx,y] in H
  std::vector<ConditionViolation> violations;

  bool almost_h_algebra() const { return j1 && j2 && metric_invariant && kernels_agree && subalgebra && kernel_skew; }
  bool h_algebra() const { return almost_h_algebra() && integrable; }
};

ModelReport validate_homogeneous_model(const LieAlgebra& g, const HStructure& h);

} // namespace lieq
