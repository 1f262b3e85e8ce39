#pragma once

#include "lieq/forms.hpp"
#include "lieq/levi.hpp"
#include "lieq/lie_algebra.hpp"

#include <optional>
#include <string>

namespace lieq {

/// One problem instance: an algebra with the forms the deciders and
/// verifiers look at. When `h` is set, `omega` and `metric` are its forms.
struct Instance {
  std::string name;
  LieAlgebra algebra;
  std::optional<LeviData> levi;
  std::optional<BilinearForm> omega;
  std::optional<BilinearForm> metric;
  std::optional<HStructure> h;
};

/// Attaches h and overwrites omega and metric with its forms.
void attach(Instance& instance, HStructure h);

/// "span{x, y - z}" or "0".
std::string format_subspace(const LieAlgebra& g, const Subspace& s);

} // namespace lieq
