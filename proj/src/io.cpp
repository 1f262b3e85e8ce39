#include "lieq/io.hpp"

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"

#include <map>
#include <set>
#include <sstream>

namespace lieq {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? "/" : where) + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Json subspace_to_json(const LieAlgebra& g, const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) out.push_back(vector_to_json(g, v));
  return out;
}

std::vector<Vector> vectors_from_json(const LieAlgebra& g, const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_from_json(g, j[i], where + "/" + std::to_string(i)));
  return out;
}

Json claims_to_json(const std::vector<Claim>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) {
    Json item{{"claim", c.label}, {"holds", c.holds}};
    if (!c.witness.empty()) item["witness"] = c.witness;
    out.push_back(std::move(item));
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) fail(at, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c], at + "/" + std::to_string(c));
  }
  return m;
}

Json to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  auto entry = [&](std::size_t i, std::size_t k, const Vector& v) {
    brackets.push_back({{"left", g.labels()[i]}, {"right", g.labels()[k]}, {"result", vector_to_json(g, v)}});
  };
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Vector self = g.basis_bracket(i, i);
    if (!is_zero(self)) entry(i, i, self);
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      const Vector v = g.basis_bracket(i, k);
      Vector w = g.basis_bracket(k, i);
      for (auto& c : w) c = -c;
      if (v != w) {
        entry(i, k, v);
        entry(k, i, g.basis_bracket(k, i));
      } else if (!is_zero(v)) {
        entry(i, k, v);
      }
    }
  }
  return {{"dim", g.dim()}, {"basis", g.labels()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& j, const std::string& where) {
  const Json& basis = member(j, "basis", where);
  if (!basis.is_array()) fail(where + "/basis", "expected an array of labels");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    labels.push_back(string_from_json(basis[i], where + "/basis/" + std::to_string(i)));
    if (!seen.insert(labels.back()).second) fail(where + "/basis/" + std::to_string(i), "duplicate label '" + labels.back() + "'");
  }
  if (j.contains("dim")) {
    const Json& d = j["dim"];
    if (!d.is_number_unsigned() || d.get<std::size_t>() != labels.size()) {
      fail(where + "/dim", "dim does not match the " + std::to_string(labels.size()) + " basis labels");
    }
  }
  LieAlgebra g(labels);
  const std::size_t n = g.dim();
  std::map<std::pair<std::size_t, std::size_t>, Vector> listed;
  const Json empty = Json::array();
  const Json& brackets = j.contains("brackets") ? j["brackets"] : empty;
  if (!brackets.is_array()) fail(where + "/brackets", "expected an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string at = where + "/brackets/" + std::to_string(b);
    auto index = [&](const char* key) {
      const std::string label = string_from_json(member(brackets[b], key, at), at + "/" + key);
      const auto i = g.index_of(label);
      if (!i) fail(at + "/" + key, "unknown basis label '" + label + "'");
      return *i;
    };
    const std::size_t l = index("left");
    const std::size_t r = index("right");
    const Vector v = vector_from_json(g, member(brackets[b], "result", at), at + "/result");
    if (listed.contains({l, r})) fail(at, "bracket [" + labels[l] + ", " + labels[r] + "] listed twice");
    listed[{l, r}] = v;
  }
  for (const auto& [key, v] : listed) {
    const auto [l, r] = key;
    const bool reverse = listed.contains({r, l});
    if (l == r || reverse) {
      // Kept verbatim; validation reports any inconsistency.
      for (std::size_t k = 0; k < n; ++k) g.set_constant(l, r, k, v[k]);
    } else {
      g.set_bracket(l, r, v);
    }
  }
  return g;
}

Json vector_to_json(const LieAlgebra& g, const Vector& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out[g.labels()[i]] = to_json(v[i]);
  }
  return out;
}

Vector vector_from_json(const LieAlgebra& g, const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object mapping basis labels to rationals");
  Vector v(g.dim());
  for (const auto& [label, value] : j.items()) {
    const auto i = g.index_of(label);
    if (!i) fail(where, "unknown basis label '" + label + "'");
    v[*i] = rational_from_json(value, where + "/" + label);
  }
  return v;
}

Json to_json(const BilinearForm& f) { return {{"kind", to_string(f.kind())}, {"gram", to_json(f.gram())}}; }

BilinearForm form_from_json(const Json& j, const std::string& where) {
  FormKind kind;
  try {
    kind = parse_form_kind(string_from_json(member(j, "kind", where), where + "/kind"));
  } catch (const Error& e) {
    fail(where + "/kind", e.what());
  }
  const RationalMatrix gram = matrix_from_json(member(j, "gram", where), where + "/gram");
  if (!gram.is_square()) fail(where + "/gram", "Gram matrix is not square");
  try {
    return {kind, gram};
  } catch (const InvalidStructure& e) {
    fail(where + "/gram", e.what());
  }
}

Json to_json(const JStructure& j) { return {{"matrix", to_json(j.matrix())}}; }

JStructure j_structure_from_json(const Json& j, const std::string& where) {
  const RationalMatrix m = matrix_from_json(member(j, "matrix", where), where + "/matrix");
  if (!m.is_square()) fail(where + "/matrix", "J is not square");
  return JStructure(m);
}

Json h_structure_to_json(const HStructure& h, const std::string& algebra_name) {
  return {{"algebra", algebra_name}, {"j", to_json(h.j())}, {"metric", to_json(h.metric())}};
}

HStructure h_structure_from_json(const Json& j, const std::string& where) {
  JStructure js = j_structure_from_json(member(j, "j", where), where + "/j");
  BilinearForm metric = form_from_json(member(j, "metric", where), where + "/metric");
  if (metric.dim() != js.dim()) throw DimensionMismatch(where + ": J and metric sizes differ");
  return HStructure(std::move(js), std::move(metric));
}

Json to_json(const Violation& v, const LieAlgebra& g) {
  const auto& l = g.labels();
  Json out{{"kind", v.kind == Violation::Kind::Antisymmetry ? "antisymmetry" : "jacobi"}, {"i", l[v.i]}, {"j", l[v.j]}};
  if (v.kind == Violation::Kind::Jacobi) out["k"] = l[v.k];
  out["message"] = v.message;
  return out;
}

Json instance_to_json(const Instance& inst) {
  const LieAlgebra& g = inst.algebra;
  Json out{{"name", inst.name}, {"algebra", to_json(g)}};
  if (inst.levi) {
    out["levi"] = {{"compact", subspace_to_json(g, inst.levi->compact)},
                   {"noncompact", subspace_to_json(g, inst.levi->noncompact)},
                   {"nilpotents", Json::array()}};
    for (const auto& v : inst.levi->nilpotents) out["levi"]["nilpotents"].push_back(vector_to_json(g, v));
  }
  if (inst.h) {
    out["hStructure"] = h_structure_to_json(*inst.h, inst.name);
  } else {
    Json forms = Json::object();
    if (inst.omega) forms["omega"] = to_json(*inst.omega);
    if (inst.metric) forms["metric"] = to_json(*inst.metric);
    out["forms"] = std::move(forms);
  }
  return out;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.name = j.contains("name") ? string_from_json(j["name"], "/name") : "instance";
  inst.algebra = algebra_from_json(member(j, "algebra", ""), "/algebra");
  const std::size_t n = inst.algebra.dim();
  auto check_dim = [n](std::size_t d, const std::string& where) {
    if (d != n) {
      throw DimensionMismatch(where + ": size " + std::to_string(d) + " but the algebra has dimension " + std::to_string(n));
    }
  };
  if (j.contains("levi")) {
    const Json& l = j["levi"];
    LeviData levi;
    levi.compact = Subspace::span(n, l.contains("compact") ? vectors_from_json(inst.algebra, l["compact"], "/levi/compact")
                                                           : std::vector<Vector>{});
    levi.noncompact = Subspace::span(
        n, l.contains("noncompact") ? vectors_from_json(inst.algebra, l["noncompact"], "/levi/noncompact")
                                    : std::vector<Vector>{});
    if (l.contains("nilpotents")) levi.nilpotents = vectors_from_json(inst.algebra, l["nilpotents"], "/levi/nilpotents");
    inst.levi = std::move(levi);
  }
  if (j.contains("forms")) {
    const Json& f = j["forms"];
    if (!f.is_object()) fail("/forms", "expected an object");
    for (const auto& [key, value] : f.items()) {
      BilinearForm form = form_from_json(value, "/forms/" + key);
      check_dim(form.dim(), "/forms/" + key);
      if (key == "omega") inst.omega = std::move(form);
      else if (key == "metric") inst.metric = std::move(form);
      else fail("/forms/" + key, "unknown form name (expected omega or metric)");
    }
  }
  if (j.contains("hStructure")) {
    HStructure h = h_structure_from_json(j["hStructure"], "/hStructure");
    check_dim(h.dim(), "/hStructure");
    attach(inst, std::move(h));
  }
  return inst;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json out = instance_to_json(e.instance);
  out["entry"] = e.name;
  out["parameters"] = e.parameters;
  out["description"] = e.description;
  Json expected = Json::array();
  for (const auto& x : e.expected) expected.push_back({{"check", x.check}, {"value", x.value}, {"basis", to_string(x.basis)}});
  out["expected"] = std::move(expected);
  return out;
}

Json to_json(const CatalogInfo& info) {
  Json params = Json::array();
  for (const auto& p : info.parameters) {
    params.push_back({{"name", p.name}, {"default", p.default_value}, {"min", p.min}, {"max", p.max}});
  }
  return {{"name", info.name}, {"parameters", params}, {"description", info.description}};
}

Json profile_to_json(const LieAlgebra& g, const StructureProfile& p, const LeviResolution& levi) {
  auto dims = [](const std::vector<Subspace>& series) {
    Json out = Json::array();
    for (const auto& s : series) out.push_back(s.dim());
    return out;
  };
  const Inertia k = inertia(p.killing_form);
  Json out{{"dim", g.dim()},
           {"abelian", g.is_abelian()},
           {"nilpotent", p.is_nilpotent},
           {"solvable", p.is_solvable},
           {"semisimple", p.is_semisimple},
           {"center", subspace_to_json(g, p.center)},
           {"nilradical", subspace_to_json(g, p.nilradical)},
           {"solvableRadical", subspace_to_json(g, p.solvable_radical)},
           {"derivedSeries", dims(p.derived_series)},
           {"lowerCentralSeries", dims(p.lower_central_series)},
           {"killingForm", to_json(p.killing_form)},
           {"killingSignature", {k.positive, k.negative, k.zero}},
           {"leviQuotientDim", p.levi_quotient_dim},
           {"leviQuotientCompact", p.levi_quotient_compact},
           {"leviSource", to_string(levi.source)}};
  if (p.nilpotency_class) out["nilpotencyClass"] = *p.nilpotency_class;
  if (levi.has_splitting) {
    out["compactLevi"] = subspace_to_json(g, levi.compact);
    out["noncompactLevi"] = subspace_to_json(g, levi.noncompact);
  }
  return out;
}

Json to_json(const InvarianceVerdict& v, const LieAlgebra& g) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    witnesses.push_back(
        {{"generator", w.generator}, {"y", g.labels()[w.y]}, {"z", g.labels()[w.z]}, {"defect", to_json(w.defect)}});
  }
  return {{"invariant", v.invariant},
          {"nilInvariant", v.nil_invariant},
          {"quasiInvariant", v.quasi_invariant},
          {"mode", to_string(v.mode)},
          {"witnesses", witnesses}};
}

Json to_json(const VerifierReport& r) {
  return {{"theorem", r.theorem},
          {"statement", r.statement},
          {"instance", r.instance},
          {"status", to_string(r.status())},
          {"hypothesesMet", r.hypotheses_met()},
          {"hypotheses", claims_to_json(r.hypotheses)},
          {"conclusions", claims_to_json(r.conclusions)},
          {"mode", to_string(r.mode)},
          {"notes", r.notes},
          {"alerts", r.alerts},
          {"researchFlags", r.research_flags}};
}

Json analysis_to_json(const InstanceAnalysis& a) {
  const LieAlgebra& g = a.instance.algebra;
  Json out{{"instance", a.instance.name}, {"profile", profile_to_json(g, a.context->profile, a.context->levi)}};
  auto form_json = [&](const BilinearForm& f, const InvarianceVerdict& v) {
    Json j = to_json(v, g);
    j["kind"] = to_string(f.kind());
    j["kernel"] = subspace_to_json(g, form_kernel(f));
    j["nondegenerate"] = is_nondegenerate(f);
    j["effective"] = is_effective(g, f);
    j["skewSet"] = subspace_to_json(g, skew_set(g, f));
    if (!f.is_symmetric()) j["closed"] = is_closed(g, f);
    return j;
  };
  Json forms = Json::object();
  if (a.omega) forms["omega"] = form_json(*a.instance.omega, *a.omega);
  if (a.metric) forms["metric"] = form_json(*a.instance.metric, *a.metric);
  out["forms"] = std::move(forms);
  if (a.instance.h) {
    const ModelReport m = validate_homogeneous_model(g, *a.instance.h);
    Json violations = Json::array();
    for (const auto& v : m.violations) violations.push_back({{"condition", v.condition}, {"detail", v.detail}});
    out["model"] = {{"almostHAlgebra", m.almost_h_algebra()}, {"hAlgebra", m.h_algebra()}, {"violations", violations}};
  }
  return out;
}

std::string to_markdown(const VerifierReport& r) {
  std::ostringstream os;
  os << "## " << r.theorem << " on " << r.instance << "\n\n";
  os << r.statement << "\n\n";
  os << "Status: **" << to_string(r.status()) << "** (" << to_string(r.mode) << ")\n\n";
  auto table = [&os](const std::string& title, const std::vector<Claim>& claims) {
    if (claims.empty()) return;
    os << "| " << title << " | holds | witness |\n|---|---|---|\n";
    for (const auto& c : claims) os << "| " << c.label << " | " << yes_no(c.holds) << " | " << c.witness << " |\n";
    os << "\n";
  };
  table("hypothesis", r.hypotheses);
  table("conclusion", r.conclusions);
  for (const auto& n : r.notes) os << "- note: " << n << "\n";
  for (const auto& a : r.alerts) os << "- **alert**: " << a << "\n";
  for (const auto& f : r.research_flags) os << "- research flag: " << f << "\n";
  if (!r.notes.empty() || !r.alerts.empty() || !r.research_flags.empty()) os << "\n";
  return os.str();
}

std::string analysis_to_markdown(const InstanceAnalysis& a) {
  const LieAlgebra& g = a.instance.algebra;
  const StructureProfile& p = a.context->profile;
  std::ostringstream os;
  os << "# " << a.instance.name << "\n\n";
  os << "- dimension: " << g.dim() << "\n";
  os << "- nilpotent: " << yes_no(p.is_nilpotent) << ", solvable: " << yes_no(p.is_solvable)
     << ", semisimple: " << yes_no(p.is_semisimple) << "\n";
  os << "- center: " << format_subspace(g, p.center) << "\n";
  os << "- nilradical: " << format_subspace(g, p.nilradical) << "\n";
  os << "- solvable radical: " << format_subspace(g, p.solvable_radical) << "\n";
  os << "- Levi quotient: dimension " << p.levi_quotient_dim << (p.levi_quotient_compact ? ", compact type" : "")
     << " (" << to_string(a.context->levi.source) << ")\n\n";
  auto form = [&](const char* name, const BilinearForm& f, const InvarianceVerdict& v) {
    os << "## " << name << " (" << to_string(f.kind()) << ")\n\n";
    os << "| invariant | nil-invariant | quasi-invariant | mode |\n|---|---|---|---|\n";
    os << "| " << yes_no(v.invariant) << " | " << yes_no(v.nil_invariant) << " | " << yes_no(v.quasi_invariant) << " | "
       << to_string(v.mode) << " |\n\n";
    os << "- kernel: " << format_subspace(g, form_kernel(f)) << "\n";
    os << "- effective: " << yes_no(is_effective(g, f)) << "\n";
    for (const auto& w : v.witnesses) {
      os << "- witness: " << w.generator << " at (" << g.labels()[w.y] << ", " << g.labels()[w.z]
         << "), defect " << to_string(w.defect) << "\n";
    }
    os << "\n";
  };
  if (a.omega) form("omega", *a.instance.omega, *a.omega);
  if (a.metric) form("metric", *a.instance.metric, *a.metric);
  return os.str();
}

} // namespace lieq
