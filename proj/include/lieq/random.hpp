#pragma once

#include "lieq/forms.hpp"
#include "lieq/instance.hpp"
#include "lieq/invariance.hpp"
#include "lieq/levi.hpp"
#include "lieq/lie_algebra.hpp"
#include "lieq/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lieq {

enum class AlgebraClass { Abelian, Nilpotent, Solvable, Mixed };
std::string to_string(AlgebraClass cls);
/// Throws BadParameters.
AlgebraClass parse_algebra_class(const std::string& text);

struct AlgebraProfile {
  AlgebraClass cls = AlgebraClass::Abelian;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
};

struct RandomAlgebra {
  LieAlgebra algebra;
  std::optional<LeviData> levi;
};

/// Deterministic in the profile. Nilpotent algebras are iterated central
/// extensions by random 2-cocycles, solvable ones extend a nilpotent or
/// abelian ideal by one derivation, mixed ones are su(2) or sl(2) acting on an
/// abelian ideal times a solvable factor (Levi data declared). Every adjoint
/// operator of the result is within the supported eigenvalue field.
/// Throws BadParameters for dim > 12 (or mixed with dim < 3) and
/// GenerationFailed after bounded retries.
RandomAlgebra random_algebra(const AlgebraProfile& profile);

enum class FormConstraint { None, NilInvariant, QuasiInvariant, Invariant };
std::string to_string(FormConstraint constraint);

struct FormOptions {
  bool nondegenerate = false;
  FormConstraint constraint = FormConstraint::None;
  /// Skew forms only.
  bool closed = false;
};

/// A random element of the linear space of forms meeting the constraints,
/// resampled until nondegenerate when requested. Throws GenerationFailed when
/// no such form exists (e.g. a nondegenerate skew form in odd dimension).
BilinearForm random_form(const AlgebraContext& ctx, FormKind kind, std::uint64_t seed, const FormOptions& options = {});
BilinearForm random_form(const LieAlgebra& g, FormKind kind, std::uint64_t seed, const FormOptions& options = {});

/// Standard J pairing consecutive basis vectors (even dimension only) with a
/// random J-invariant metric such that metric and omega both satisfy the
/// constraint. Empty when only the zero metric qualifies or dim is odd.
std::optional<HStructure> random_h_structure(const AlgebraContext& ctx, std::uint64_t seed,
                                             FormConstraint constraint = FormConstraint::None);

/// Operator with known Jordan parts: conjugated blocks with rational,
/// complex-conjugate and real-quadratic eigenvalues plus nilpotent tails.
struct PlantedOperator {
  RationalMatrix matrix;
  OperatorDecomposition parts;
};
PlantedOperator random_planted_operator(std::size_t dim, std::uint64_t seed);

/// Corpus member: class seed % 4, dimension 2..max_dim, an omega and a metric
/// (or an h-structure) of varying constraint. Deterministic in seed.
Instance corpus_instance(std::uint64_t seed, std::size_t max_dim = 8);
std::vector<Instance> random_corpus(std::size_t count, std::size_t max_dim = 8, std::uint64_t first_seed = 0);

} // namespace lieq
