#pragma once

// Verification suites: each checks one family of identities against
// exhaustive enumeration up to a maximal length.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permdyck/dyck.hpp"
#include "permdyck/permutation.hpp"

namespace permdyck {

struct VerifyOptions {
  std::vector<std::string> suites;  // names from suite_names(), or "all"
  int max_n = 7;
  int workers = 1;
  int series_order = 8;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  int max_n_reached = 0;
  std::optional<std::string> counterexample;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verification(const VerifyOptions& options);
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

/// The map to Dyck paths straight from its recursive definition.
DyckPath dyck_path_by_recursion(const Permutation& p);

}  // namespace permdyck
