#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gaussmap {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;  // the row filter left nothing to check
  std::string details;   // deterministic; wall times never appear here
};

struct VerifyOptions {
  unsigned threads = 0;      // worker count for the curve jobs; 0 = hardware
  std::vector<int> rows;     // subset of {1,...,5}; empty means all rows
  int mutate_criterion = 0;  // corrupts that criterion's expected values,
                             // to prove the harness can fail
  bool thread_replay = true;  // recompute the curve table on a different
                              // thread count and compare bytes
};

struct VerifyOutcome {
  std::vector<CriterionResult> criteria;
  nlohmann::json json;  // {"criteria": [...], "curves": [...]}
  bool all_pass = false;
};

/// Runs the whole replication suite over the fixed curve corpus:
///   row 1  hyperelliptic y^2 = f, g = 3..10, one cyclotomic and three
///          seeded pseudo-random squarefree f per genus;
///   row 2  y^3 = x^9 - 1;
///   row 3  y^3 = x^10 - 1 and y^3 = x^13 - 1;
///   row 4  y^5 = -x^5 - 1;
///   row 5  y^3 = x^6 - 1;
/// then checks the rank laws, the vanishing and factorization identities,
/// the counting identities, and the method-level property suites.
/// Deterministic except for the budget verdicts, which compare measured
/// wall time against fixed allowances.
VerifyOutcome run_verify_paper(const VerifyOptions& opts = {});

/// One line per criterion: "PASS  1  <name>: <details>".
std::string render_criteria(const std::vector<CriterionResult>& criteria);

}  // namespace gaussmap
