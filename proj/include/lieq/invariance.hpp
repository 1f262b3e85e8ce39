#pragma once

#include "lieq/forms.hpp"
#include "lieq/levi.hpp"
#include "lieq/lie_algebra.hpp"
#include "lieq/linalg.hpp"
#include "lieq/structure.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lieq {

/// Jordan parts of ad(u).
OperatorDecomposition ad_jordan_parts(const LieAlgebra& g, const Vector& u);

/// Replicas of a real-split semisimple operator: the part with rational
/// eigenvalues and, for each square class d, the part carrying the
/// eigenvalues with a sqrt(d) component. They sum to the operator.
std::vector<RationalMatrix> split_replicas(const RationalMatrix& real_split);

struct Generator {
  std::string description;
  RationalMatrix matrix;
};

/// Elements known to lie in the Lie algebra of the Zariski closure of Inn(g).
/// The nilpotent generators are nilpotent there; the quasi generators add
/// real-split semisimple elements. All of them are derivations of g.
struct GeneratorSet {
  std::vector<Generator> nilpotent;
  std::vector<Generator> split;
  /// The generators reach the whole noncompact Levi part of the closure, so
  /// positive verdicts are conclusive.
  bool levi_complete = false;
  /// Elements of g whose adjoints were used as nilpotent generators.
  std::vector<Vector> nilpotent_elements;

  /// Basis of the Lie algebra generated by the nilpotent generators, or by
  /// both families. Stabilization of the bracket closure is asserted.
  std::vector<RationalMatrix> closure(bool include_split) const;
};

GeneratorSet build_generator_set(const LieAlgebra& g, const StructureProfile& profile, const LeviResolution& levi);

/// Everything the deciders need about one algebra, computed once and shared.
struct AlgebraContext {
  LieAlgebra algebra;
  StructureProfile profile;
  LeviResolution levi;
  GeneratorSet generators;
};

/// Throws UnsupportedEigenvalueField when an adjoint operator has an
/// irreducible factor of degree above two, and InvalidLeviData for bad input.
std::shared_ptr<const AlgebraContext> make_context(const LieAlgebra& g, const std::optional<LeviData>& levi = std::nullopt);

struct Witness {
  std::string generator;
  std::size_t y = 0;
  std::size_t z = 0;
  Rational defect;  ///< f(phi y, z) + f(y, phi z)
};

enum class VerdictMode { Exact, GeneratorApproximation };
std::string to_string(VerdictMode mode);

struct CheckResult {
  bool holds = true;
  /// False only for a positive verdict that relies on an incomplete generator set.
  bool conclusive = true;
  std::optional<Witness> witness;
};

CheckResult nil_invariance_check(const AlgebraContext& ctx, const BilinearForm& f);
CheckResult quasi_invariance_check(const AlgebraContext& ctx, const BilinearForm& f);
/// Every ad(x) is f-skew.
bool full_invariance_check(const LieAlgebra& g, const BilinearForm& f);

struct InvarianceVerdict {
  bool invariant = false;
  bool nil_invariant = false;
  bool quasi_invariant = false;
  VerdictMode mode = VerdictMode::Exact;
  bool nil_conclusive = true;
  bool quasi_conclusive = true;
  std::vector<Witness> witnesses;
};

InvarianceVerdict analyze_form(const AlgebraContext& ctx, const BilinearForm& f);

struct HInvarianceVerdict {
  InvarianceVerdict metric;
  InvarianceVerdict omega;
  bool nil_invariant = false;
  bool quasi_invariant = false;
  VerdictMode mode = VerdictMode::Exact;
};

HInvarianceVerdict h_structure_invariance(const AlgebraContext& ctx, const HStructure& h);

/// phi(e_j) lies in the skew set of f for every generator phi (nilpotent and
/// split) and basis vector e_j.
bool acis_image_check(const AlgebraContext& ctx, const BilinearForm& f);

} // namespace lieq
