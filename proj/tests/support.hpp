#pragma once

#include "lieq/forms.hpp"
#include "lieq/lie_algebra.hpp"

#include <string>
#include <vector>

namespace testing {

using namespace lieq;

inline LieAlgebra heisenberg1() {
  LieAlgebra g({"x", "y", "z"});
  g.set_bracket("x", "y", {{"z", 1}});
  return g;
}

inline LieAlgebra two_dim() {
  LieAlgebra g({"x", "y"});
  g.set_bracket("x", "y", {{"y", 1}});
  return g;
}

inline LieAlgebra g1() {
  LieAlgebra g({"a", "x", "y", "z"});
  g.set_bracket("x", "y", {{"z", 1}});
  g.set_bracket("a", "x", {{"x", 1}});
  g.set_bracket("a", "y", {{"y", 1}});
  g.set_bracket("a", "z", {{"z", 2}});
  return g;
}

inline LieAlgebra su2() {
  LieAlgebra g({"e1", "e2", "e3"});
  g.set_bracket("e1", "e2", {{"e3", 1}});
  g.set_bracket("e2", "e3", {{"e1", 1}});
  g.set_bracket("e3", "e1", {{"e2", 1}});
  return g;
}

inline LieAlgebra sl2() {
  LieAlgebra g({"h", "e", "f"});
  g.set_bracket("h", "e", {{"e", 2}});
  g.set_bracket("h", "f", {{"f", -2}});
  g.set_bracket("e", "f", {{"h", 1}});
  return g;
}

inline Vector vec(const LieAlgebra& g, const std::vector<std::pair<std::string, Rational>>& terms) {
  Vector v(g.dim());
  for (const auto& [label, c] : terms) v[*g.index_of(label)] += c;
  return v;
}

inline Subspace span(const LieAlgebra& g, const std::vector<std::string>& labels) {
  std::vector<Vector> vs;
  for (const auto& l : labels) vs.push_back(g.basis_vector(*g.index_of(l)));
  return Subspace::span(g.dim(), vs);
}

inline BilinearForm skew(const LieAlgebra& g, const std::vector<std::tuple<std::string, std::string, Rational>>& pairs) {
  RationalMatrix m(g.dim(), g.dim());
  for (const auto& [a, b, c] : pairs) {
    m(*g.index_of(a), *g.index_of(b)) += c;
    m(*g.index_of(b), *g.index_of(a)) -= c;
  }
  return {FormKind::Skew, m};
}

inline BilinearForm symmetric(const RationalMatrix& m) { return {FormKind::Symmetric, m}; }

} // namespace testing
