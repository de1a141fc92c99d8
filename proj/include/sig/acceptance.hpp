#pragma once

#include <map>
#include <string>
#include <vector>

#include "sig/classes.hpp"
#include "sig/graph.hpp"

namespace sig {

struct AcceptanceConfig {
  // Lowers the sweeps to s,p <= 3 and the graph corpus to n <= 7.
  bool quick = false;
  // Replacement forbidden-subgraph graphs, for fault injection.
  std::map<Pattern, Graph> pattern_overrides;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;

  bool all_passed() const;
};

AcceptanceReport run_acceptance(const AcceptanceConfig& config = {});

// "PASS  3 enumeration count ... (0.42 s, budget 30 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace sig
