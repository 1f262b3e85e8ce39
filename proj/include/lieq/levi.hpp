#pragma once

#include "lieq/lie_algebra.hpp"
#include "lieq/structure.hpp"
#include "lieq/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieq {

/// Levi data supplied with an instance: spans of the compact part K and the
/// noncompact part S of a Levi subalgebra, plus elements of S with nilpotent
/// adjoint that generate S.
struct LeviData {
  Subspace compact;
  Subspace noncompact;
  std::vector<Vector> nilpotents;
};

/// Throws InvalidLeviData unless K and S are commuting semisimple subalgebras
/// with K of compact type, K + S complementary to the radical, and the
/// nilpotents generating S.
void verify_levi_data(const LieAlgebra& g, const StructureProfile& profile, const LeviData& levi);

enum class LeviSource {
  Solvable,       ///< the algebra is its own radical
  Declared,       ///< verified input data
  DirectProduct,  ///< g = C x R with C = [Z(R), Z(R)]
  QuotientOnly,   ///< no splitting known; Levi type read off g/R
};

std::string to_string(LeviSource source);

struct LeviResolution {
  LeviSource source = LeviSource::QuotientOnly;
  bool has_splitting = false;
  Subspace compact;     ///< K, when has_splitting
  Subspace noncompact;  ///< S, when has_splitting
  std::vector<Vector> nilpotents;
  /// g/R is trivial or of compact type.
  bool quotient_compact = false;
};

LeviResolution resolve_levi(const LieAlgebra& g, const StructureProfile& profile,
                            const std::optional<LeviData>& declared);

/// Lie subalgebra generated by a set of vectors.
Subspace generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& generators);

} // namespace lieq
