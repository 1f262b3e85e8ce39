#include "lieq/instance.hpp"

namespace lieq {

void attach(Instance& instance, HStructure h) {
  instance.omega = h.omega();
  instance.metric = h.metric();
  instance.h = std::move(h);
}

std::string format_subspace(const LieAlgebra& g, const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  const auto vs = s.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_vector(g, vs[i]);
  }
  return out + "}";
}

} // namespace lieq
