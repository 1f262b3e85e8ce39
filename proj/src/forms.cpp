#include "lieq/forms.hpp"

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"
#include "lieq/structure.hpp"

namespace lieq {

namespace {

// Solutions x of sum_i x_i M_i = 0, given the flattened M_i as columns.
Subspace solve_linear_family(std::size_t n, const std::vector<Vector>& flattened) {
  if (flattened.empty() || flattened.front().empty()) return Subspace::whole(n);
  return Subspace(n, kernel(RationalMatrix::from_columns(flattened.front().size(), flattened)));
}

// Flattened conditions for: ad(x) H in H and ad(x) J - J ad(x) = 0 mod H.
Subspace j_linear_elements(const LieAlgebra& g, const RationalMatrix& j, const Subspace& h) {
  const std::size_t n = g.dim();
  const RationalMatrix q = h.annihilator();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix& a = g.ad_basis(i);
    Vector v = (q * (a * j - j * a)).flatten();
    if (h.dim() > 0) {
      const Vector w = (q * a * h.basis()).flatten();
      v.insert(v.end(), w.begin(), w.end());
    }
    cols.push_back(std::move(v));
  }
  return solve_linear_family(n, cols);
}

std::string label_pair(const LieAlgebra& g, std::size_t i, std::size_t j) {
  return "(" + g.labels()[i] + ", " + g.labels()[j] + ")";
}

} // namespace

std::string to_string(FormKind kind) { return kind == FormKind::Symmetric ? "symmetric" : "skew"; }

FormKind parse_form_kind(const std::string& text) {
  if (text == "symmetric") return FormKind::Symmetric;
  if (text == "skew") return FormKind::Skew;
  throw ParseError("form kind must be \"symmetric\" or \"skew\", got \"" + text + "\"");
}

BilinearForm::BilinearForm(FormKind kind, RationalMatrix gram) : kind_(kind), gram_(std::move(gram)) {
  if (!gram_.is_square()) throw InvalidStructure("Gram matrix is not square");
  if (kind_ == FormKind::Symmetric && !gram_.is_symmetric()) throw InvalidStructure("Gram matrix is not symmetric");
  if (kind_ == FormKind::Skew && !gram_.is_skew()) throw InvalidStructure("Gram matrix is not skew-symmetric");
}

Rational BilinearForm::operator()(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

RationalMatrix skew_defect(const BilinearForm& f, const RationalMatrix& phi) {
  return phi.transpose() * f.gram() + f.gram() * phi;
}

bool is_skew_operator(const BilinearForm& f, const RationalMatrix& phi) { return skew_defect(f, phi).is_zero(); }

Subspace form_kernel(const BilinearForm& f) { return Subspace(f.dim(), kernel(f.gram())); }

bool is_nondegenerate(const BilinearForm& f) { return form_kernel(f).is_zero(); }

Subspace orthogonal_complement(const BilinearForm& f, const Subspace& s) {
  if (s.dim() == 0) return Subspace::whole(f.dim());
  // f(v, s) = s^T G^T v
  return Subspace(f.dim(), kernel(s.basis().transpose() * f.gram().transpose()));
}

bool orthogonal(const BilinearForm& f, const Subspace& a, const Subspace& b) {
  if (a.dim() == 0 || b.dim() == 0) return true;
  return (a.basis().transpose() * f.gram() * b.basis()).is_zero();
}

RationalMatrix restricted_gram(const BilinearForm& f, const Subspace& s) {
  return s.basis().transpose() * f.gram() * s.basis();
}

Subspace skew_set(const LieAlgebra& g, const BilinearForm& f) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < g.dim(); ++i) cols.push_back(skew_defect(f, g.ad_basis(i)).flatten());
  Subspace s = solve_linear_family(g.dim(), cols);
  if (!is_subalgebra(g, s)) throw InvalidAlgebra("skew set is not a subalgebra");
  return s;
}

std::optional<std::array<std::size_t, 3>> closedness_violation(const LieAlgebra& g, const BilinearForm& f) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational s = f(g.basis_bracket(i, j), g.basis_vector(k)) + f(g.basis_bracket(j, k), g.basis_vector(i)) +
                           f(g.basis_bracket(k, i), g.basis_vector(j));
        if (sgn(s) != 0) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool is_closed(const LieAlgebra& g, const BilinearForm& f) {
  if (f.kind() != FormKind::Skew) throw InvalidStructure("closedness is defined for skew forms");
  return !closedness_violation(g, f).has_value();
}

bool is_effective(const LieAlgebra& g, const BilinearForm& f) {
  return maximal_ideal_within(g, form_kernel(f)).is_zero();
}

JStructure::JStructure(RationalMatrix matrix) : j_(std::move(matrix)) {
  if (!j_.is_square()) throw InvalidStructure("J is not square");
  if (!(j_ * j_ * j_ + j_).is_zero()) throw InvalidStructure("J^2 is not -1 modulo ker J");
  if (!intersect(kernel(), Subspace(dim(), j_)).is_zero()) throw InvalidStructure("ker J meets im J");
}

Subspace JStructure::kernel() const { return Subspace(dim(), lieq::kernel(j_)); }

HStructure::HStructure(JStructure j, BilinearForm metric) : j_(std::move(j)), metric_(std::move(metric)) {
  if (metric_.dim() != j_.dim()) throw DimensionMismatch("J and metric sizes differ");
  if (!metric_.is_symmetric()) throw InvalidStructure("h-structure metric must be symmetric");
  const RationalMatrix& jm = j_.matrix();
  if (jm.transpose() * metric_.gram() * jm != metric_.gram()) throw InvalidStructure("metric is not J-invariant");
  kernel_ = form_kernel(metric_);
  if (!kernel_.contains(j_.kernel())) throw InvalidStructure("ker J is not inside the metric kernel");
  omega_ = BilinearForm(FormKind::Skew, jm.transpose() * metric_.gram());
  if (form_kernel(omega_) != kernel_) throw InvalidStructure("metric and fundamental form kernels differ");
}

Subspace g_J(const LieAlgebra& g, const JStructure& j) { return j_linear_elements(g, j.matrix(), j.kernel()); }

Subspace g_J_h(const LieAlgebra& g, const HStructure& h) { return j_linear_elements(g, h.j().matrix(), h.kernel()); }

Subspace g_h(const LieAlgebra& g, const HStructure& h) {
  return intersect(skew_set(g, h.omega()), skew_set(g, h.metric()));
}

Subspace g_metric_J(const LieAlgebra& g, const HStructure& h) {
  return intersect(skew_set(g, h.metric()), g_J(g, h.j()));
}

namespace {

// Flattened basis of {phi : phi^T G + G phi = 0}.
std::vector<Vector> skew_operators(const BilinearForm& f, bool j_linear, const RationalMatrix& j) {
  const std::size_t n = f.dim();
  std::vector<Vector> cols;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r) {
      RationalMatrix e(n, n);
      e(p, r) = 1;
      Vector v = skew_defect(f, e).flatten();
      if (j_linear) {
        const Vector w = commutator(e, j).flatten();
        v.insert(v.end(), w.begin(), w.end());
      }
      cols.push_back(std::move(v));
    }
  }
  const RationalMatrix k = kernel(RationalMatrix::from_columns(cols.front().size(), cols));
  return k.columns();
}

} // namespace

std::vector<RationalMatrix> unitary_algebra(const HStructure& h) {
  if (!h.is_nondegenerate()) throw DegenerateHStructure("unitary algebra needs a nondegenerate metric");
  const std::size_t n = h.dim();
  std::vector<RationalMatrix> out;
  if (n == 0) return out;
  for (const auto& v : skew_operators(h.metric(), true, h.j().matrix())) out.push_back(RationalMatrix::unflatten(n, n, v));
  return out;
}

bool unitary_is_totally_real(const HStructure& h) {
  const std::size_t n = h.dim();
  if (n == 0) return true;
  std::vector<Vector> u;
  for (const auto& m : unitary_algebra(h)) u.push_back(m.flatten());
  std::vector<Vector> jo;
  for (const auto& v : skew_operators(h.metric(), false, h.j().matrix())) {
    jo.push_back((h.j().matrix() * RationalMatrix::unflatten(n, n, v)).flatten());
  }
  return intersect(Subspace::span(n * n, u), Subspace::span(n * n, jo)).is_zero();
}

ModelReport validate_homogeneous_model(const LieAlgebra& g, const HStructure& h) {
  ModelReport r;
  const std::size_t n = g.dim();
  if (h.dim() != n) throw DimensionMismatch("h-structure and algebra sizes differ");
  const RationalMatrix& j = h.j().matrix();
  const Subspace& kern = h.kernel();

  for (const auto& v : kern.vectors()) {
    if (!is_zero(j * v)) {
      r.j1 = false;
      r.violations.push_back({"J1", 0, 0, "J does not vanish on the kernel"});
      break;
    }
  }
  const RationalMatrix j2 = j * j + RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n && r.j2; ++i) {
    if (!kern.contains(j2.column(i))) {
      r.j2 = false;
      r.violations.push_back({"J2", i, i, "J^2 " + g.labels()[i] + " + " + g.labels()[i] + " is not in the kernel"});
    }
  }
  if (j.transpose() * h.metric().gram() * j != h.metric().gram()) {
    r.metric_invariant = false;
    r.violations.push_back({"H", 0, 0, "metric is not J-invariant"});
  }
  if (h.j().kernel() != kern || form_kernel(h.omega()) != kern) {
    r.kernels_agree = false;
    r.violations.push_back({"kernel", 0, 0, "ker J, ker <,> and ker omega differ"});
  }
  const auto hv = kern.vectors();
  for (std::size_t a = 0; a < hv.size() && r.subalgebra; ++a) {
    for (std::size_t b = a + 1; b < hv.size(); ++b) {
      if (!kern.contains(g.bracket(hv[a], hv[b]))) {
        r.subalgebra = false;
        r.violations.push_back({"subalgebra", a, b, "kernel is not closed under brackets"});
        break;
      }
    }
  }
  if (!g_metric_J(g, h).contains(kern)) {
    r.kernel_skew = false;
    r.violations.push_back({"kernel-skew", 0, 0, "kernel does not act skewly and J-linearly"});
  }
  for (std::size_t x = 0; x < n && r.integrable; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const Vector ex = g.basis_vector(x);
      const Vector ey = g.basis_vector(y);
      const Vector jx = j * ex;
      const Vector jy = j * ey;
      const Vector nij = g.bracket(jx, jy) - g.basis_bracket(x, y) - j * g.bracket(ex, jy) - j * g.bracket(jx, ey);
      if (!kern.contains(nij)) {
        r.integrable = false;
        r.violations.push_back({"J4", x, y, "integrability fails on " + label_pair(g, x, y)});
        break;
      }
    }
  }
  return r;
}

} // namespace lieq
