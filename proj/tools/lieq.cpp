#include "lieq/catalog.hpp"
#include "lieq/errors.hpp"
#include "lieq/io.hpp"
#include "lieq/random.hpp"
#include "lieq/theorems.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace lieq;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kLimitation = 3 };

struct Options {
  std::vector<std::string> paths;
  std::string catalog;
  std::vector<std::string> params;
  std::string theorem = "all";
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t count = 500;
  std::size_t dim = 8;
  bool parallel = false;
  bool primary_only = false;
  bool with_catalog = true;
};

class UsageError : public Error {
public:
  using Error::Error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::map<std::string, int> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, int> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "' is not of the form name=value");
    try {
      out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("parameter '" + item + "' has a non-integer value");
    }
  }
  return out;
}

/// Instances named on the command line: files, or one catalog entry.
std::vector<Instance> load_instances(const Options& o) {
  std::vector<Instance> out;
  if (!o.catalog.empty()) out.push_back(catalog_get(o.catalog, parse_params(o.params)).instance);
  for (const auto& p : o.paths) {
    try {
      out.push_back(instance_from_json(read_json(p)));
    } catch (const ParseError& e) {
      throw ParseError(p + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no input: give instance files or --catalog");
  return out;
}

InstanceAnalysis analyze_with_context(const Instance& inst) {
  try {
    return analyze_instance(inst);
  } catch (const UnsupportedEigenvalueField& e) {
    throw UnsupportedEigenvalueField("instance '" + inst.name + "': " + e.what());
  }
}

void emit(const Options& o, const Json& json, const std::string& markdown) {
  if (o.format == "markdown") std::cout << markdown;
  else std::cout << json.dump(2) << "\n";
}

int cmd_validate(const Options& o) {
  Json results = Json::array();
  std::ostringstream md;
  bool ok = true;
  for (const auto& path : o.paths) {
    const Json doc = read_json(path);
    Json r{{"path", path}};
    LieAlgebra g;
    try {
      g = doc.contains("basis") ? algebra_from_json(doc) : instance_from_json(doc).algebra;
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
    const auto violation = g.validate();
    r["valid"] = !violation.has_value();
    if (violation) {
      ok = false;
      r["violation"] = to_json(*violation, g);
      md << "- " << path << ": **invalid**, " << violation->message << "\n";
    } else {
      md << "- " << path << ": valid (dimension " << g.dim() << ")\n";
    }
    results.push_back(std::move(r));
  }
  emit(o, results, md.str());
  return ok ? kOk : kFailure;
}

int cmd_analyze(const Options& o) {
  Json out = Json::array();
  std::string md;
  for (const auto& inst : load_instances(o)) {
    const InstanceAnalysis a = analyze_with_context(inst);
    out.push_back(analysis_to_json(a));
    md += analysis_to_markdown(a);
  }
  emit(o, out.size() == 1 ? out[0] : out, md);
  return kOk;
}

std::vector<VerifierReport> run_verifiers(const InstanceAnalysis& a, const std::string& theorem, bool primary_only) {
  if (theorem == "all") return verify_all(a, primary_only);
  return {verify(theorem, a)};
}

int cmd_verify(const Options& o) {
  if (o.theorem != "all") find_theorem(o.theorem);
  Json out = Json::array();
  std::string md;
  bool alerts = false;
  for (const auto& inst : load_instances(o)) {
    const InstanceAnalysis a = analyze_with_context(inst);
    for (const auto& r : run_verifiers(a, o.theorem, o.primary_only)) {
      alerts = alerts || !r.alerts.empty();
      out.push_back(to_json(r));
      md += to_markdown(r);
    }
  }
  emit(o, out.size() == 1 ? out[0] : out, md);
  return alerts ? kFailure : kOk;
}

struct SweepResult {
  std::string name;
  std::string error;
  bool unsupported = false;
  std::vector<VerifierReport> reports;
};

SweepResult sweep_one(const std::function<Instance()>& make, bool primary_only) {
  SweepResult r;
  bool name_known = false;
  try {
    const Instance inst = make();
    r.name = inst.name;
    name_known = true;
    r.reports = verify_all(analyze_instance(inst), primary_only);
  } catch (const UnsupportedEigenvalueField& e) {
    r.unsupported = true;
    r.error = e.what();
  } catch (const Error& e) {
    r.error = e.what();
  }
  if (!name_known) r.name = "(generation failed)";
  return r;
}

int cmd_sweep(const Options& o) {
  if (o.dim > 12) throw UsageError("--dim is limited to 12 for corpus sweeps");
  std::vector<std::function<Instance()>> jobs;
  if (o.with_catalog) {
    for (const auto& e : catalog_all()) jobs.push_back([inst = e.instance] { return inst; });
  }
  for (std::size_t i = 0; i < o.count; ++i) {
    jobs.push_back([seed = o.seed + i, dim = o.dim] { return corpus_instance(seed, dim); });
  }
  std::vector<SweepResult> results(jobs.size());
  const unsigned workers = o.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = sweep_one(jobs[i], o.primary_only);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  struct Tally {
    std::size_t met = 0, pass = 0, exact = 0;
  };
  std::map<std::string, Tally> tally;
  Json alerts = Json::array(), flags = Json::array(), errors = Json::array(), unsupported = Json::array();
  for (const auto& r : results) {
    if (!r.error.empty()) {
      (r.unsupported ? unsupported : errors).push_back({{"instance", r.name}, {"error", r.error}});
      continue;
    }
    for (const auto& rep : r.reports) {
      Tally& t = tally[rep.theorem];
      if (rep.hypotheses_met()) {
        ++t.met;
        if (rep.mode == VerdictMode::Exact) ++t.exact;
        if (rep.status() == ReportStatus::Pass) ++t.pass;
      }
      for (const auto& a : rep.alerts) alerts.push_back({{"instance", r.name}, {"theorem", rep.theorem}, {"claim", a}});
      for (const auto& f : rep.research_flags) flags.push_back({{"instance", r.name}, {"theorem", rep.theorem}, {"claim", f}});
    }
  }
  Json theorems_json = Json::object();
  std::ostringstream md;
  md << "# Sweep\n\n- instances: " << results.size() << " (seeds " << o.seed << ".." << o.seed + o.count - 1
     << ", dim <= " << o.dim << (o.with_catalog ? ", plus catalog" : "") << ")\n- alerts: " << alerts.size()
     << "\n- research flags: " << flags.size() << "\n- unsupported eigenvalue field: " << unsupported.size() << "\n- errors: " << errors.size() << "\n\n";
  md << "| theorem | hypotheses met | exact | pass |\n|---|---|---|---|\n";
  for (const auto& [id, t] : tally) {
    theorems_json[id] = {{"hypothesesMet", t.met}, {"exact", t.exact}, {"pass", t.pass}};
    md << "| " << id << " | " << t.met << " | " << t.exact << " | " << t.pass << " |\n";
  }
  for (const auto& a : alerts) md << "- **alert** " << a["instance"].get<std::string>() << " " << a["theorem"].get<std::string>() << ": " << a["claim"].get<std::string>() << "\n";
  for (const auto& e : unsupported) md << "- unsupported " << e["instance"].get<std::string>() << ": " << e["error"].get<std::string>() << "\n";
  for (const auto& e : errors) md << "- error " << e["instance"].get<std::string>() << ": " << e["error"].get<std::string>() << "\n";
  const Json summary{{"instances", results.size()}, {"theorems", theorems_json}, {"alerts", alerts},
                     {"researchFlags", flags}, {"unsupported", unsupported}, {"errors", errors}};
  emit(o, summary, md.str());
  return alerts.empty() && errors.empty() ? kOk : kFailure;
}

int cmd_catalog_list(const Options& o) {
  Json out = Json::array();
  std::ostringstream md;
  for (const auto& info : catalog_entries()) {
    out.push_back(to_json(info));
    md << "- " << info.name;
    for (const auto& p : info.parameters) md << " " << p.name << "=" << p.default_value << " [" << p.min << ".." << p.max << "]";
    md << ": " << info.description << "\n";
  }
  emit(o, out, md.str());
  return kOk;
}

int cmd_catalog_emit(const Options& o) {
  const CatalogEntry e = catalog_get(o.catalog, parse_params(o.params));
  const Json j = catalog_entry_to_json(e);
  emit(o, j, "```json\n" + j.dump(2) + "\n```\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariance deciders and structure-theorem verifiers for Lie algebras with bilinear forms"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&o](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  };
  auto add_source = [&o](CLI::App* c) {
    c->add_option("paths", o.paths, "Instance JSON files");
    c->add_option("--catalog", o.catalog, "Use a catalog entry instead of files");
    c->add_option("--param,--params", o.params, "Catalog parameter name=value");
  };

  auto* validate = app.add_subcommand("validate", "Parse algebra or instance files and check antisymmetry and Jacobi");
  validate->add_option("paths", o.paths, "Algebra or instance JSON files")->required();
  add_format(validate);

  auto* analyze = app.add_subcommand("analyze", "Structure profile and invariance verdicts");
  add_source(analyze);
  add_format(analyze);

  auto* verify_cmd = app.add_subcommand("verify", "Run structure-theorem verifiers");
  add_source(verify_cmd);
  verify_cmd->add_option("--theorem", o.theorem, "Theorem id, or 'all'");
  verify_cmd->add_flag("--primary", o.primary_only, "Only the eight structure theorems when --theorem all");
  add_format(verify_cmd);

  auto* sweep = app.add_subcommand("sweep", "Verify all theorems over the random corpus and the catalog");
  sweep->add_option("--seed", o.seed, "First corpus seed");
  sweep->add_option("--count", o.count, "Number of random instances");
  sweep->add_option("--dim", o.dim, "Largest random dimension (at most 12)");
  sweep->add_flag("--parallel", o.parallel, "Spread instances over hardware threads");
  sweep->add_flag("--primary", o.primary_only, "Only the eight structure theorems");
  sweep->add_flag("!--no-catalog", o.with_catalog, "Skip the catalog entries");
  add_format(sweep);

  auto* catalog = app.add_subcommand("catalog", "Built-in examples");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries and parameters");
  add_format(list);
  auto* emit_cmd = catalog->add_subcommand("emit", "Print one entry as an instance document");
  emit_cmd->add_option("name", o.catalog, "Entry name")->required();
  emit_cmd->add_option("--param,--params", o.params, "Parameter name=value");
  add_format(emit_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*analyze) return cmd_analyze(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*sweep) return cmd_sweep(o);
    if (*list) return cmd_catalog_list(o);
    if (*emit_cmd) return cmd_catalog_emit(o);
  } catch (const UnsupportedEigenvalueField& e) {
    std::cerr << "unsupported eigenvalue field: " << e.what() << "\n";
    return kLimitation;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownTheorem& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownEntry& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const BadParameters& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
