#pragma once

#include <string>
#include <vector>

#include "socle/groups.hpp"

namespace socle {

/// One verified claim inside a scenario report.
struct ClaimRow {
  std::string claim;
  std::string computed;
  std::string expected;
  std::string provenance;  // "literature" | "definition" | "derived"
  std::string verdict;     // "pass" | "fail" | "inconclusive"
};

struct ScenarioReport {
  std::string scenario;
  std::string params;  // deterministic echo of the effective parameters
  std::vector<ClaimRow> rows;
  long runtime_ms = 0;  // excluded from serialized rows
};

struct ScenarioOptions {
  std::string base;        // base-field descriptor override
  long p = 0;              // 0 = scenario default
  long n = 0;              // family size (lemma34, abelian-rank)
  long k = 0;              // basis size (prop35)
  int max_order = 0;       // group-order bound (prop24-*, frattini-demo)
  const Catalog* catalog = nullptr;  // nullptr = built-in catalog
};

/// The scenario names, in canonical order.
const std::vector<std::string>& scenario_names();

/// Runs one named scenario; UnknownScenarioError for unknown names. Errors
/// inside a scenario become fail/inconclusive rows, never silent omissions.
ScenarioReport run_scenario(const std::string& name,
                            const ScenarioOptions& opts = {});

/// format = "human" (aligned table) or "jsonl" (one JSON object per claim;
/// byte-stable across runs).
std::string emit_report(const ScenarioReport& rep, const std::string& format);

/// 0 = all pass, 1 = some claim failed, 2 = no failure but some claim
/// inconclusive.
int report_exit_code(const ScenarioReport& rep);
int reports_exit_code(const std::vector<ScenarioReport>& reps);

}  // namespace socle
