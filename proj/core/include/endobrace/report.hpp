#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endobrace/regular.hpp"

namespace endobrace {

// One verification run: where the group and endomorphism come from, which
// sign, which checks, and the scan limits. Identical configs produce
// byte-identical JSON.
struct RunConfig {
  std::string group_source;            // file path, zoo:<spec>, or paper:<name>
  std::string endo_source;             // identity | zero | gen:... | enumerate | file path
  int epsilon = 0;                     // +1 or -1; 0 = take the example's default
  std::vector<std::string> checks;     // empty = all of classify, oracles, fitting,
                                       // brace, ybe, hg, equivariance
  Limits limits;
  std::optional<std::string> export_brace_path;
};

struct ResolvedInput {
  GroupPtr group;
  GroupMap psi;
  int epsilon = 0;
  std::string group_desc;
  std::string endo_desc;
};
ResolvedInput resolve_input(const RunConfig& config);

struct RunResult {
  std::string json;
  std::string text;
  int exit_code = 0;  // 0 = all predicted equivalences held, 1 = some violated
};

// The `check` engine: runs the requested checks in dependency order and
// cross-checks every equivalence the conditions predict; disagreements are
// collected under "mismatches".
RunResult run(const RunConfig& config);

// Full endomorphism sweep of one group: per-flag counts plus the number of
// oracle/condition disagreements (expected zero). Uses a brute-force
// generating set of size <= 3.
RunResult enumerate_and_classify(const RunConfig& config);

// Solution export for one variant ("rG", "rGop", "rG1", "rG1op") or "all".
RunResult ybe_export(const RunConfig& config, const std::string& variant);

// The named-subgroup report as JSON.
RunResult hg_report(const RunConfig& config);

}  // namespace endobrace
