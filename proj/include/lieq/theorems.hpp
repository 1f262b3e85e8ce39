#pragma once

#include "lieq/catalog.hpp"
#include "lieq/instance.hpp"
#include "lieq/invariance.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lieq {

struct Claim {
  std::string label;
  bool holds = true;
  std::string witness;  ///< empty when the claim holds
};

enum class ReportStatus { Pass, Fail, HypothesisNotMet };
std::string to_string(ReportStatus status);

struct VerifierReport {
  std::string theorem;
  std::string statement;
  std::string instance;
  std::vector<Claim> hypotheses;
  std::vector<Claim> conclusions;  ///< empty unless every hypothesis holds
  VerdictMode mode = VerdictMode::Exact;
  std::vector<std::string> notes;
  /// Conclusion failures with hypotheses decided exactly.
  std::vector<std::string> alerts;
  /// Conclusion failures whose hypotheses rest on a generator approximation.
  std::vector<std::string> research_flags;

  bool hypotheses_met() const;
  ReportStatus status() const;
};

/// An instance with its shared algebra context and the verdicts of its forms.
struct InstanceAnalysis {
  Instance instance;
  std::shared_ptr<const AlgebraContext> context;
  std::optional<InvarianceVerdict> omega;
  std::optional<InvarianceVerdict> metric;
};

/// Throws UnsupportedEigenvalueField, InvalidAlgebra or InvalidLeviData.
InstanceAnalysis analyze_instance(const Instance& instance);

struct TheoremInfo {
  std::string id;
  std::string statement;
  /// One of the eight structure theorems; the others are supporting identities.
  bool primary = false;
  VerifierReport (*run)(const InstanceAnalysis&) = nullptr;
};

const std::vector<TheoremInfo>& theorems();
/// Throws UnknownTheorem.
const TheoremInfo& find_theorem(const std::string& id);
VerifierReport verify(const std::string& id, const InstanceAnalysis& analysis);
std::vector<VerifierReport> verify_all(const InstanceAnalysis& analysis, bool primary_only = false);

VerifierReport verify_nil_skew(const InstanceAnalysis& a);
VerifierReport verify_skew_solvable(const InstanceAnalysis& a);
VerifierReport verify_quasi_solv_abelian(const InstanceAnalysis& a);
VerifierReport verify_radical_nilpotent(const InstanceAnalysis& a);
VerifierReport verify_symplectic_structure(const InstanceAnalysis& a);
VerifierReport verify_metric_symplectic(const InstanceAnalysis& a);
VerifierReport verify_pk_orthogonality(const InstanceAnalysis& a);
VerifierReport verify_ZB_profile(const InstanceAnalysis& a);

/// Value of an observation key as used by catalog expectations, e.g.
/// "omega.nil_invariant", "nilradical", "theorem.nil_skew".
std::string observe(const InstanceAnalysis& analysis, const std::string& key);

struct Mismatch {
  std::string check;
  std::string expected;
  std::string actual;
};

/// Expectations of a catalog entry that the deciders do not reproduce.
/// The key "analyze" observes "unsupported-eigenvalue-field" when analysis throws.
std::vector<Mismatch> expectation_mismatches(const CatalogEntry& entry);

} // namespace lieq
