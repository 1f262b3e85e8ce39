#pragma once

#include "lieq/instance.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieq {

/// Why an expected value is believed: stated with the source example, trivial,
/// or computed once by brute force.
enum class Basis { Stated, Trivial, Derived };
std::string to_string(Basis basis);

struct Expectation {
  std::string check;  ///< observation key, see observe()
  std::string value;
  Basis basis = Basis::Derived;
};

struct CatalogEntry {
  std::string name;
  std::map<std::string, int> parameters;
  std::string description;
  Instance instance;
  std::vector<Expectation> expected;
};

struct ParameterSpec {
  std::string name;
  int default_value = 0;
  int min = 0;
  int max = 0;
};

struct CatalogInfo {
  std::string name;
  std::vector<ParameterSpec> parameters;
  std::string description;
};

const std::vector<CatalogInfo>& catalog_entries();

/// Throws UnknownEntry or BadParameters. Missing parameters take defaults.
CatalogEntry catalog_get(const std::string& name, const std::map<std::string, int>& parameters = {});

/// Every entry at its default parameters plus a few further parameter values.
std::vector<CatalogEntry> catalog_all();

} // namespace lieq
