#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekrm/budget.hpp"

namespace ekrm {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,     // malformed input, unknown names
  kExitBudget = 2,    // budget abort or non-exhaustive search
  kExitMismatch = 3,  // reproduce: some fixture disagrees
};

struct JobSpec {
  std::string group;
  std::string subgroup;
  std::set<std::string> checks;  // subset of ekr, strict, module, certificate
  Budget budget;
  double time_limit_seconds = 0.0;  // 0: none; checked between pipeline stages
  std::string format = "json";      // json | table
  int threads = 0;                  // 0: OpenMP default
};

/// Budget defaults with EKRM_MAX_NODES, EKRM_MAX_GROUP_ORDER,
/// EKRM_MAX_FIXER_UNION, EKRM_ORACLE_ORDER and EKRM_MAX_GRAPH_VERTICES
/// applied. Throws std::invalid_argument for a non-positive or malformed value.
Budget budget_from_env();

/// Validates and normalizes: "all" expands, checks are non-empty and known,
/// group and subgroup non-empty and parseable, budgets positive.
/// Throws std::invalid_argument or ParseError.
JobSpec validate_job(JobSpec job);

nlohmann::json to_json(const JobSpec& job);
/// Missing fields take defaults; unknown keys are rejected.
JobSpec job_from_json(const nlohmann::json& j);

struct Report {
  nlohmann::json body;  // deterministic part
  double seconds = 0.0;
  std::uint64_t search_nodes = 0;
  int exit_code = kExitOk;
  nlohmann::json to_json() const;  // body plus {"timing": {seconds, search_nodes}}
};

/// kernel_reduce, shortcuts, enumeration, character criterion, then an
/// optional certificate search. A budget abort yields a partial report with
/// status "budget_exceeded" and exit code kExitBudget.
Report run_job(const JobSpec& job);

/// Human-readable rendering of a run_job report.
std::string render_table(const nlohmann::json& report);

struct FixtureResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Runs the named suite ("paper"). Throws std::invalid_argument for an
/// unknown suite. `inject_failure` appends a fixture with a wrong expectation.
std::vector<FixtureResult> reproduce(const std::string& suite, bool inject_failure = false);

/// The ekrtool front end; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ekrm
