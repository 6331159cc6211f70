#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagrank {

// Options shared by all report builders (the CLI flags map onto these).
struct ReportConfig {
  std::uint64_t seed = 1;
  int retries = 5;
  int height = 3;
  int word_length = 0;  // 0 = 2 * rank
  int max_rank = 8;
  int threads = 0;
  std::string format = "json";  // "json" | "markdown"
};

struct ReportResult {
  std::string text;
  // A computed verdict disagreed with the closed-form answer or with an
  // independent cross-check.  Reported, never silently swallowed.
  bool mismatch = false;
};

// Open diagonal orbit on (G/P_I)^n, with an independent Levi-side
// cross-check whenever P is conjugate to its opposite.
ReportResult classify_report(char family, int rank,
                             const std::vector<int>& marked, int n,
                             const ReportConfig& cfg);

// Recompute a classification table ("theorem1" | "theorem2" | "corollary")
// and compare it cell by cell with the closed-form answers.
ReportResult table_report(const std::string& name, const ReportConfig& cfg);

// Decomposition of u^- as a module over the Levi subgroup, with invariant
// quadratics and central-character relations.
ReportResult decompose_report(char family, int rank,
                              const std::vector<int>& marked,
                              const ReportConfig& cfg);

// Exact invariance of a case's rational invariant.  case_name in
// {"B", "C", "D", "D1ll"} (aliases "B1l", "C1l", "Dll" accepted).
ReportResult invariants_report(const std::string& case_name, int l, int trials,
                               const ReportConfig& cfg);

// Cross-ratio infinitude certificate.  kind in {"quadruple",
// "so6-cross-ratio", "so2l-p1l", "so2l-pll"}; params are rational strings.
ReportResult certify_report(const std::string& kind, int l,
                            const std::vector<std::string>& params1,
                            const std::vector<std::string>& params2,
                            int trials, const ReportConfig& cfg);

}  // namespace flagrank
