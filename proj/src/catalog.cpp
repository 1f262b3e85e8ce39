#include "lieq/catalog.hpp"

#include "lieq/errors.hpp"
#include "lieq/structure.hpp"

#include <functional>

namespace lieq {

namespace {

using Params = std::map<std::string, int>;

struct Builder {
  CatalogInfo info;
  std::function<void(CatalogEntry&)> build;
};

void expect(CatalogEntry& e, std::string check, std::string value, Basis basis) {
  e.expected.push_back({std::move(check), std::move(value), basis});
}

std::size_t at(const LieAlgebra& g, const std::string& label) { return *g.index_of(label); }

void bracket(LieAlgebra& g, const std::string& a, const std::string& b,
             const std::vector<std::pair<std::string, Rational>>& terms) {
  g.set_bracket(a, b, terms);
}

BilinearForm skew_form(const LieAlgebra& g, const std::vector<std::tuple<std::string, std::string, Rational>>& pairs) {
  RationalMatrix m(g.dim(), g.dim());
  for (const auto& [a, b, v] : pairs) {
    m(at(g, a), at(g, b)) += v;
    m(at(g, b), at(g, a)) -= v;
  }
  return {FormKind::Skew, m};
}

BilinearForm symmetric_form(const LieAlgebra& g, const std::vector<std::tuple<std::string, std::string, Rational>>& pairs) {
  RationalMatrix m(g.dim(), g.dim());
  for (const auto& [a, b, v] : pairs) {
    m(at(g, a), at(g, b)) += v;
    if (a != b) m(at(g, b), at(g, a)) += v;
  }
  return {FormKind::Symmetric, m};
}

/// J sending each first label to the second and the second to minus the first.
JStructure complex_pairs(const LieAlgebra& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  RationalMatrix j(g.dim(), g.dim());
  for (const auto& [a, b] : pairs) {
    j(at(g, b), at(g, a)) = 1;
    j(at(g, a), at(g, b)) = -1;
  }
  return JStructure(j);
}

LieAlgebra su2(const std::string& p = "e") {
  LieAlgebra g({p + "1", p + "2", p + "3"});
  bracket(g, p + "1", p + "2", {{p + "3", 1}});
  bracket(g, p + "2", p + "3", {{p + "1", 1}});
  bracket(g, p + "3", p + "1", {{p + "2", 1}});
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g({"h", "e", "f"});
  bracket(g, "h", "e", {{"e", 2}});
  bracket(g, "h", "f", {{"f", -2}});
  bracket(g, "e", "f", {{"h", 1}});
  return g;
}

std::string num(int k) { return std::to_string(k); }

void abelian_torus(CatalogEntry& e) {
  const int p = e.parameters.at("p");
  const int q = e.parameters.at("q");
  const int m = p + q;
  if (m < 1) throw BadParameters("abelian-torus needs p + q >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("x" + num(i));
  for (int i = 1; i <= m; ++i) labels.push_back("y" + num(i));
  const LieAlgebra g(labels);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::tuple<std::string, std::string, Rational>> metric;
  for (int i = 1; i <= m; ++i) {
    pairs.emplace_back("x" + num(i), "y" + num(i));
    const Rational s = i <= p ? 1 : -1;
    metric.emplace_back("x" + num(i), "x" + num(i), s);
    metric.emplace_back("y" + num(i), "y" + num(i), s);
  }
  e.instance.algebra = g;
  attach(e.instance, HStructure(complex_pairs(g, pairs), symmetric_form(g, metric)));
  expect(e, "algebra.abelian", "true", Basis::Trivial);
  expect(e, "metric.signature", "(" + num(2 * p) + "," + num(2 * q) + ",0)", Basis::Stated);
  for (const char* f : {"omega", "metric"}) {
    expect(e, std::string(f) + ".invariant", "true", Basis::Trivial);
    expect(e, std::string(f) + ".nondegenerate", "true", Basis::Trivial);
  }
  expect(e, "model.h_algebra", "true", Basis::Trivial);
  expect(e, "theorem.radical_nilpotent", "pass", Basis::Stated);
  expect(e, "theorem.nil_skew", "pass", Basis::Trivial);
  expect(e, "theorem.symplectic_structure", "pass", Basis::Trivial);
  expect(e, "theorem.metric_symplectic", "pass", Basis::Trivial);
  expect(e, "theorem.quasi_solv_abelian", "pass", Basis::Trivial);
  expect(e, "theorem.ZB_profile", "pass", Basis::Trivial);
}

void two_dim_solvable(CatalogEntry& e) {
  LieAlgebra g({"x", "y"});
  bracket(g, "x", "y", {{"y", 1}});
  e.instance.algebra = g;
  e.instance.omega = skew_form(g, {{"x", "y", 1}});
  expect(e, "omega.nil_invariant", "true", Basis::Stated);
  expect(e, "omega.quasi_invariant", "false", Basis::Stated);
  expect(e, "omega.invariant", "false", Basis::Stated);
  expect(e, "omega.mode", "exact", Basis::Derived);
  expect(e, "omega.skew_set", "span{y}", Basis::Stated);
  expect(e, "omega.closed", "true", Basis::Derived);
  expect(e, "omega.effective", "true", Basis::Derived);
  expect(e, "nilradical", "span{y}", Basis::Derived);
  expect(e, "killing", "[[1, 0], [0, 0]]", Basis::Derived);
  expect(e, "theorem.skew_solvable", "hypothesis-not-met", Basis::Stated);
  expect(e, "theorem.quasi_solv_abelian", "hypothesis-not-met", Basis::Stated);
  expect(e, "theorem.ZB_profile", "hypothesis-not-met", Basis::Stated);
  expect(e, "theorem.nil_skew", "pass", Basis::Derived);
  expect(e, "theorem.symplectic_structure", "pass", Basis::Derived);
}

LieAlgebra heisenberg_algebra(int n, bool with_a) {
  std::vector<std::string> labels;
  if (with_a) labels.push_back("a");
  for (int i = 1; i <= n; ++i) labels.push_back("x" + num(i));
  for (int i = 1; i <= n; ++i) labels.push_back("y" + num(i));
  labels.push_back("z");
  LieAlgebra g(labels);
  for (int i = 1; i <= n; ++i) bracket(g, "x" + num(i), "y" + num(i), {{"z", 1}});
  return g;
}

void heisenberg(CatalogEntry& e) {
  const int n = e.parameters.at("n");
  const LieAlgebra g = heisenberg_algebra(n, false);
  std::vector<std::tuple<std::string, std::string, Rational>> w;
  for (int i = 1; i <= n; ++i) w.emplace_back("x" + num(i), "y" + num(i), 1);
  e.instance.algebra = g;
  e.instance.omega = skew_form(g, w);
  expect(e, "center", "span{z}", Basis::Trivial);
  expect(e, "nilradical.dim", num(2 * n + 1), Basis::Trivial);
  expect(e, "lower_central_series", "(" + num(2 * n + 1) + ",1,0)", Basis::Derived);
  expect(e, "omega.invariant", "true", Basis::Derived);
  expect(e, "omega.effective", "false", Basis::Derived);
  expect(e, "theorem.nil_skew", "hypothesis-not-met", Basis::Stated);
}

void gn(CatalogEntry& e) {
  const int n = e.parameters.at("n");
  LieAlgebra g = heisenberg_algebra(n, true);
  for (int i = 1; i <= n; ++i) {
    bracket(g, "a", "x" + num(i), {{"x" + num(i), 1}});
    bracket(g, "a", "y" + num(i), {{"y" + num(i), 1}});
  }
  bracket(g, "a", "z", {{"z", 2}});
  std::vector<std::tuple<std::string, std::string, Rational>> w{{"a", "z", 1}};
  for (int i = 1; i <= n; ++i) w.emplace_back("x" + num(i), "y" + num(i), 1);
  e.instance.algebra = g;
  e.instance.omega = skew_form(g, w);
  std::string heis = "span{";
  for (int i = 1; i <= n; ++i) heis += "x" + num(i) + ", ";
  for (int i = 1; i <= n; ++i) heis += "y" + num(i) + ", ";
  heis += "z}";
  expect(e, "omega.nondegenerate", "true", Basis::Stated);
  expect(e, "omega.nil_invariant", "true", Basis::Stated);
  expect(e, "omega.quasi_invariant", "false", Basis::Derived);
  expect(e, "omega.quasi_witness", "phi_split(ad a)", Basis::Derived);
  expect(e, "omega.invariant", "false", Basis::Derived);
  expect(e, "omega.mode", "exact", Basis::Derived);
  expect(e, "omega.closed", "false", Basis::Derived);
  expect(e, "omega.effective", "true", Basis::Trivial);
  expect(e, "nilradical", heis, Basis::Stated);
  expect(e, "fitting.a", "(span{a}," + heis + ")", Basis::Stated);
  expect(e, "ad.a.real_split_is_ad", "true", Basis::Stated);
  expect(e, "theorem.nil_skew", "pass", Basis::Stated);
  expect(e, "theorem.quasi_solv_abelian", "hypothesis-not-met", Basis::Derived);
  expect(e, "theorem.symplectic_structure", "hypothesis-not-met", Basis::Derived);
}

void su2_entry(CatalogEntry& e) {
  const LieAlgebra g = su2();
  e.instance.algebra = g;
  e.instance.metric = BilinearForm(FormKind::Symmetric, killing_form(g));
  expect(e, "killing", "[[-2, 0, 0], [0, -2, 0], [0, 0, -2]]", Basis::Derived);
  expect(e, "compact_type", "true", Basis::Derived);
  expect(e, "metric.invariant", "true", Basis::Trivial);
  expect(e, "radical.dim", "0", Basis::Trivial);
}

void sl2_entry(CatalogEntry& e) {
  const LieAlgebra g = sl2();
  e.instance.algebra = g;
  e.instance.metric = BilinearForm(FormKind::Symmetric, killing_form(g));
  expect(e, "compact_type", "false", Basis::Derived);
  expect(e, "killing.signature", "(2,1,0)", Basis::Derived);
  expect(e, "metric.invariant", "true", Basis::Trivial);
  expect(e, "radical.dim", "0", Basis::Trivial);
}

/// su2 with the h-structure of the two-sphere: J rotates e1, e2 and kills e3.
void add_sphere_structure(const std::string& p, Rational scale,
                          std::vector<std::pair<std::string, std::string>>& pairs,
                          std::vector<std::tuple<std::string, std::string, Rational>>& metric) {
  pairs.emplace_back(p + "1", p + "2");
  metric.emplace_back(p + "1", p + "1", scale);
  metric.emplace_back(p + "2", p + "2", scale);
}

void su2_times_abelian(CatalogEntry& e) {
  const int d = e.parameters.at("d");
  if (d % 2 != 0) throw BadParameters("su2-times-abelian needs an even d");
  const LieAlgebra g = direct_product(su2(), LieAlgebra::abelian(d, "r"));
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::tuple<std::string, std::string, Rational>> metric;
  add_sphere_structure("e", 1, pairs, metric);
  for (int i = 1; i <= d / 2; ++i) {
    pairs.emplace_back("r" + num(2 * i - 1), "r" + num(2 * i));
    metric.emplace_back("r" + num(2 * i - 1), "r" + num(2 * i - 1), 1);
    metric.emplace_back("r" + num(2 * i), "r" + num(2 * i), 1);
  }
  e.instance.algebra = g;
  attach(e.instance, HStructure(complex_pairs(g, pairs), symmetric_form(g, metric)));
  expect(e, "omega.closed", "true", Basis::Derived);
  expect(e, "omega.effective", "true", Basis::Derived);
  expect(e, "omega.nil_invariant", "true", Basis::Derived);
  expect(e, "omega.mode", "exact", Basis::Derived);
  expect(e, "model.almost_h_algebra", "true", Basis::Derived);
  expect(e, "levi.source", "direct-product", Basis::Derived);
  expect(e, "theorem.symplectic_structure", "pass", Basis::Derived);
  expect(e, "theorem.pk_orthogonality", "pass", Basis::Derived);
  expect(e, "theorem.metric_symplectic", "pass", Basis::Derived);
  expect(e, "theorem.skew_solvable", "pass", Basis::Trivial);
}

void dual_pairing(CatalogEntry& e) {
  const int k = e.parameters.at("K");
  const int d = e.parameters.at("d");
  if (d != 2 * k) throw BadParameters("dual-pairing needs d = dim W = 2K");
  LieAlgebra g = su2("e1");
  for (int c = 2; c <= k; ++c) g = direct_product(g, su2("e" + num(c)));
  g = direct_product(g, LieAlgebra::abelian(d, "r"));
  std::vector<std::tuple<std::string, std::string, Rational>> w;
  std::vector<std::tuple<std::string, std::string, Rational>> m;
  for (int c = 1; c <= k; ++c) {
    const std::string p = "e" + num(c);
    w.emplace_back(p + "1", p + "2", 1);
    m.emplace_back(p + "1", "r" + num(2 * c - 1), 1);
    m.emplace_back(p + "2", "r" + num(2 * c), 1);
  }
  for (int i = 1; i <= d / 2; ++i) w.emplace_back("r" + num(2 * i - 1), "r" + num(2 * i), 1);
  e.instance.algebra = g;
  e.instance.omega = skew_form(g, w);
  e.instance.metric = symmetric_form(g, m);
  expect(e, "metric.nil_invariant", "true", Basis::Stated);
  expect(e, "metric.invariant", "false", Basis::Derived);
  expect(e, "omega.closed", "true", Basis::Derived);
  expect(e, "kernels_agree", "true", Basis::Stated);
  expect(e, "theorem.metric_symplectic", "pass", Basis::Stated);
  expect(e, "theorem.symplectic_structure", "pass", Basis::Derived);
}

void oscillator(CatalogEntry& e) {
  const int n = e.parameters.at("n");
  std::vector<std::string> labels{"a", "b"};
  for (int k = 1; k <= n; ++k) {
    labels.push_back("p" + num(k));
    labels.push_back("q" + num(k));
  }
  LieAlgebra g(labels);
  std::vector<std::tuple<std::string, std::string, Rational>> w{{"a", "b", 1}};
  for (int k = 1; k <= n; ++k) {
    bracket(g, "a", "p" + num(k), {{"q" + num(k), k}});
    bracket(g, "a", "q" + num(k), {{"p" + num(k), -k}});
    w.emplace_back("a", "p" + num(k), 1);
  }
  e.instance.algebra = g;
  e.instance.omega = skew_form(g, w);
  expect(e, "omega.nil_invariant", "true", Basis::Derived);
  expect(e, "omega.quasi_invariant", "true", Basis::Derived);
  expect(e, "omega.invariant", "false", Basis::Derived);
  expect(e, "omega.mode", "exact", Basis::Derived);
  expect(e, "omega.closed", "true", Basis::Derived);
  expect(e, "omega.effective", "true", Basis::Derived);
  expect(e, "omega.nondegenerate", "false", Basis::Derived);
  expect(e, "ad.a.real_split_zero", "true", Basis::Derived);
  expect(e, "theorem.skew_solvable", "pass", Basis::Derived);
  expect(e, "theorem.ZB_profile", "pass", Basis::Derived);
  expect(e, "theorem.symplectic_structure", "pass", Basis::Derived);
}

void u2_hopf(CatalogEntry& e) {
  const LieAlgebra g = direct_product(su2(), LieAlgebra::abelian(1, "t"));
  RationalMatrix id = RationalMatrix::identity(4);
  e.instance.algebra = g;
  attach(e.instance, HStructure(complex_pairs(g, {{"e1", "e2"}, {"e3", "t1"}}), BilinearForm(FormKind::Symmetric, id)));
  expect(e, "model.almost_h_algebra", "true", Basis::Derived);
  expect(e, "model.h_algebra", "true", Basis::Derived);
  expect(e, "metric.invariant", "true", Basis::Derived);
  expect(e, "omega.invariant", "false", Basis::Derived);
  expect(e, "omega.quasi_invariant", "true", Basis::Derived);
  expect(e, "omega.closed", "false", Basis::Derived);
  expect(e, "theorem.radical_nilpotent", "pass", Basis::Derived);
  expect(e, "theorem.pk_orthogonality", "hypothesis-not-met", Basis::Derived);
}

void su2_power(CatalogEntry& e) {
  const int k = e.parameters.at("k");
  LieAlgebra g = su2("e1");
  for (int c = 2; c <= k; ++c) g = direct_product(g, su2("e" + num(c)));
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::tuple<std::string, std::string, Rational>> metric;
  for (int c = 1; c <= k; ++c) add_sphere_structure("e" + num(c), c, pairs, metric);
  e.instance.algebra = g;
  attach(e.instance, HStructure(complex_pairs(g, pairs), symmetric_form(g, metric)));
  expect(e, "omega.closed", "true", Basis::Derived);
  expect(e, "model.almost_h_algebra", "true", Basis::Derived);
  expect(e, "theorem.pk_orthogonality", "pass", Basis::Stated);
}

void sl2_times_abelian(CatalogEntry& e) {
  const LieAlgebra g = direct_product(sl2(), LieAlgebra::abelian(2, "r"));
  e.instance.algebra = g;
  e.instance.omega = skew_form(g, {{"r1", "r2", 1}});
  expect(e, "omega.nil_invariant", "true", Basis::Derived);
  expect(e, "omega.mode", "exact", Basis::Derived);
  expect(e, "omega.effective", "false", Basis::Derived);
  expect(e, "levi.source", "direct-product", Basis::Derived);
  expect(e, "theorem.S_orthogonal", "pass", Basis::Derived);
  expect(e, "theorem.nil_skew", "hypothesis-not-met", Basis::Derived);
}

void sl2_standard_rep(CatalogEntry& e) {
  LieAlgebra g({"h", "e", "f", "v1", "v2"});
  bracket(g, "h", "e", {{"e", 2}});
  bracket(g, "h", "f", {{"f", -2}});
  bracket(g, "e", "f", {{"h", 1}});
  bracket(g, "h", "v1", {{"v1", 1}});
  bracket(g, "h", "v2", {{"v2", -1}});
  bracket(g, "e", "v2", {{"v1", 1}});
  bracket(g, "f", "v1", {{"v2", 1}});
  const std::size_t n = g.dim();
  LeviData levi;
  levi.compact = Subspace::zero(n);
  levi.noncompact = Subspace::span(n, {g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)});
  levi.nilpotents = {g.basis_vector(1), g.basis_vector(2)};
  e.instance.algebra = g;
  e.instance.levi = levi;
  e.instance.omega = skew_form(g, {{"v1", "v2", 1}});
  expect(e, "levi.source", "declared", Basis::Trivial);
  expect(e, "omega.nil_invariant", "false", Basis::Derived);
  expect(e, "omega.effective", "true", Basis::Derived);
  expect(e, "omega.mode", "exact", Basis::Derived);
  expect(e, "theorem.nil_skew", "hypothesis-not-met", Basis::Derived);
}

void cubic_eigenvalue(CatalogEntry& e) {
  LieAlgebra g({"a", "u1", "u2", "u3"});
  bracket(g, "a", "u1", {{"u2", 1}});
  bracket(g, "a", "u2", {{"u3", 1}});
  bracket(g, "a", "u3", {{"u1", 2}});
  e.instance.algebra = g;
  e.instance.omega = skew_form(g, {{"a", "u1", 1}});
  expect(e, "analyze", "unsupported-eigenvalue-field", Basis::Trivial);
}

const std::vector<Builder>& builders() {
  static const std::vector<Builder> list{
      {{"abelian-torus", {{"p", 1, 0, 4}, {"q", 0, 0, 4}}, "flat pseudo-Hermitian model C^{p,q}"}, abelian_torus},
      {{"two-dim-solvable", {}, "[x,y] = y with omega = dx^dy"}, two_dim_solvable},
      {{"heisenberg", {{"n", 1, 1, 5}}, "Heisenberg algebra H_n with the degenerate form sum dx_i^dy_i"}, heisenberg},
      {{"Gn", {{"n", 1, 1, 3}}, "split extension of H_n by a with [a,w] = w, [a,z] = 2z"}, gn},
      {{"su2", {}, "compact simple model with its Killing form"}, su2_entry},
      {{"sl2", {}, "split simple model with its Killing form"}, sl2_entry},
      {{"su2-times-abelian", {{"d", 2, 0, 6}}, "su2 x R^d with the sphere times flat h-structure"}, su2_times_abelian},
      {{"dual-pairing", {{"K", 1, 1, 2}, {"d", 2, 2, 4}}, "su2^K x R^d, metric pairing W with R^d, product symplectic form"},
       dual_pairing},
      {{"oscillator", {{"n", 1, 1, 3}}, "a rotating R^{2n} with speeds 1..n, central b"}, oscillator},
      {{"u2-hopf", {}, "u(2) = su2 x R with the Hopf-type h-structure"}, u2_hopf},
      {{"su2-power", {{"k", 2, 1, 3}}, "su2^k with a sphere h-structure on each factor"}, su2_power},
      {{"sl2-times-abelian", {}, "sl2 x R^2 with omega on the abelian factor"}, sl2_times_abelian},
      {{"sl2-standard-rep", {}, "sl2 acting on R^2 by the standard representation, declared Levi data"},
       sl2_standard_rep},
      {{"cubic-eigenvalue", {}, "ad(a) with minimal polynomial t^3 - 2 on the abelian ideal"}, cubic_eigenvalue},
  };
  return list;
}

} // namespace

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::Stated: return "stated";
    case Basis::Trivial: return "trivial";
    case Basis::Derived: return "derived";
  }
  return "unknown";
}

const std::vector<CatalogInfo>& catalog_entries() {
  static const std::vector<CatalogInfo> infos = [] {
    std::vector<CatalogInfo> out;
    for (const auto& b : builders()) out.push_back(b.info);
    return out;
  }();
  return infos;
}

CatalogEntry catalog_get(const std::string& name, const std::map<std::string, int>& parameters) {
  for (const auto& b : builders()) {
    if (b.info.name != name) continue;
    CatalogEntry e;
    e.name = name;
    e.description = b.info.description;
    for (const auto& [key, value] : parameters) {
      bool known = false;
      for (const auto& spec : b.info.parameters) known = known || spec.name == key;
      if (!known) throw BadParameters(name + " has no parameter '" + key + "'");
    }
    for (const auto& spec : b.info.parameters) {
      const auto it = parameters.find(spec.name);
      const int v = it == parameters.end() ? spec.default_value : it->second;
      if (v < spec.min || v > spec.max) {
        throw BadParameters(name + ": " + spec.name + " must lie in [" + std::to_string(spec.min) + ", " +
                            std::to_string(spec.max) + "]");
      }
      e.parameters[spec.name] = v;
    }
    b.build(e);
    e.instance.name = name;
    for (const auto& [key, value] : e.parameters) {
      e.instance.name += (key == e.parameters.begin()->first ? "(" : ",") + key + "=" + std::to_string(value);
    }
    if (!e.parameters.empty()) e.instance.name += ")";
    e.instance.algebra.require_valid();
    return e;
  }
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

std::vector<CatalogEntry> catalog_all() {
  std::vector<CatalogEntry> out;
  for (const auto& info : catalog_entries()) out.push_back(catalog_get(info.name));
  out.push_back(catalog_get("abelian-torus", {{"p", 1}, {"q", 1}}));
  out.push_back(catalog_get("abelian-torus", {{"p", 0}, {"q", 2}}));
  out.push_back(catalog_get("heisenberg", {{"n", 2}}));
  out.push_back(catalog_get("Gn", {{"n", 2}}));
  out.push_back(catalog_get("su2-times-abelian", {{"d", 0}}));
  out.push_back(catalog_get("su2-times-abelian", {{"d", 4}}));
  out.push_back(catalog_get("dual-pairing", {{"K", 2}, {"d", 4}}));
  out.push_back(catalog_get("oscillator", {{"n", 2}}));
  out.push_back(catalog_get("su2-power", {{"k", 3}}));
  return out;
}

} // namespace lieq
