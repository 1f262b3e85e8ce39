#pragma once

#include "lieq/lie_algebra.hpp"
#include "lieq/subspace.hpp"

#include <optional>
#include <vector>

namespace lieq {

/// span{[a, b] : a in A, b in B}
Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
/// Smallest ideal containing s.
Subspace ideal_generated(const LieAlgebra& g, const Subspace& s);

Subspace center(const LieAlgebra& g);
/// {x : [x, s] = 0 for all s in S}
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
/// {x : [x, S] in S}
Subspace normalizer(const LieAlgebra& g, const Subspace& s);

/// g, [g,g], [[g,g],[g,g]], ... until the terms stop changing.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// Same as derived_series for the subalgebra s.
std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& s);
/// g, [g,g], [g,[g,g]], ... until stabilization.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& s);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g, const Subspace& s);
bool is_nilpotent(const LieAlgebra& g, const Subspace& s);
/// Length of the lower central series of s down to zero; nullopt if not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g, const Subspace& s);
/// [s, s] = 0
bool is_abelian(const LieAlgebra& g, const Subspace& s);

RationalMatrix killing_form(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);
/// Negative definite Killing form. Throws NotSemisimple; the zero algebra
/// counts as compact.
bool is_compact_type(const LieAlgebra& g);

/// Killing-orthogonal complement of [g, g]; checked to be a solvable ideal.
Subspace solvable_radical(const LieAlgebra& g);
/// Elements of the radical whose adjoint is nilpotent, found as the
/// trace-form radical of the unital associative algebra generated by ad(R).
Subspace nilradical(const LieAlgebra& g);
Subspace nilradical(const LieAlgebra& g, const Subspace& radical);

/// Largest ideal of g inside s.
Subspace maximal_ideal_within(const LieAlgebra& g, const Subspace& s);

struct Quotient {
  LieAlgebra algebra;
  RationalMatrix projection;  ///< dim(g/I) x dim(g)
  RationalMatrix lift;        ///< dim(g) x dim(g/I), columns span the chosen complement
};

/// g / I with the standard complement of I as representatives.
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

/// Subalgebra s as an algebra of its own in the basis s.basis().
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s);

/// Simple ideals of a semisimple algebra (as subspaces of g), found from the
/// primary decomposition of its centroid.
std::vector<Subspace> simple_ideals(const LieAlgebra& g);

struct StructureProfile {
  Subspace nilradical;
  Subspace solvable_radical;
  std::vector<Subspace> derived_series;
  std::vector<Subspace> lower_central_series;
  Subspace center;
  RationalMatrix killing_form;
  bool is_semisimple = false;
  bool is_solvable = false;
  bool is_nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  /// Semisimple quotient g/R; compact type or trivial.
  bool levi_quotient_compact = false;
  std::size_t levi_quotient_dim = 0;
};

StructureProfile structure_profile(const LieAlgebra& g);

} // namespace lieq
