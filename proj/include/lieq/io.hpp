#pragma once

#include "lieq/catalog.hpp"
#include "lieq/forms.hpp"
#include "lieq/instance.hpp"
#include "lieq/invariance.hpp"
#include "lieq/lie_algebra.hpp"
#include "lieq/theorems.hpp"

#include <json.hpp>

#include <string>

namespace lieq {

using Json = nlohmann::ordered_json;

// All parsers throw ParseError with a JSON-pointer-like location, e.g.
// "/brackets/2/result/y: division by zero in '1/0'".

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j, const std::string& where = "");

Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, const std::string& where = "");

/// {"dim": n, "basis": [...], "brackets": [{"left", "right", "result": {label: rational}}]}.
/// Both orders of a pair may be listed; inconsistent values are kept so that
/// validation reports the antisymmetry violation.
Json to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j, const std::string& where = "");

/// {label: rational} with zero entries omitted.
Json vector_to_json(const LieAlgebra& g, const Vector& v);
Vector vector_from_json(const LieAlgebra& g, const Json& j, const std::string& where = "");

/// {"kind": "symmetric" | "skew", "gram": [[...]]}
Json to_json(const BilinearForm& f);
BilinearForm form_from_json(const Json& j, const std::string& where = "");

/// {"matrix": [[...]]}
Json to_json(const JStructure& j);
JStructure j_structure_from_json(const Json& j, const std::string& where = "");

/// {"algebra": name, "j": {...}, "metric": {...}}
Json h_structure_to_json(const HStructure& h, const std::string& algebra_name);
HStructure h_structure_from_json(const Json& j, const std::string& where = "");

Json to_json(const Violation& v, const LieAlgebra& g);

/// {"name", "algebra", "levi"?, "forms": {"omega"?, "metric"?}, "hStructure"?}
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json catalog_entry_to_json(const CatalogEntry& e);
Json to_json(const CatalogInfo& info);

Json profile_to_json(const LieAlgebra& g, const StructureProfile& p, const LeviResolution& levi);
/// {"invariant", "nilInvariant", "quasiInvariant", "mode", "witnesses": [...]}
Json to_json(const InvarianceVerdict& v, const LieAlgebra& g);
Json to_json(const VerifierReport& r);
Json analysis_to_json(const InstanceAnalysis& a);

std::string to_markdown(const VerifierReport& r);
std::string analysis_to_markdown(const InstanceAnalysis& a);

} // namespace lieq
