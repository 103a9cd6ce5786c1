#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace qspair {

// One verified identity. Rows aggregate into suite reports and serialize to
// JSON with exactly these six fields.
struct CheckRow {
  std::string suite;
  std::string check;
  std::string identity;
  std::string status;  // "pass", "fail", or "skipped"
  long long ms = 0;
  std::size_t max_terms = 0;
};

using Report = std::vector<CheckRow>;

// Process-wide limits applied to each individual check; the CLI sets them
// from --mem-limit / --time-budget. Zero terms means unlimited.
struct CheckLimits {
  std::size_t term_ceiling = 0;
  std::chrono::milliseconds time = std::chrono::hours(24);
};
CheckLimits& check_limits();

// Runs one identity check under a fresh budget scope. The body returns
// whether the identity holds; BudgetExceeded converts to status "skipped",
// every other exception propagates.
CheckRow run_check(std::string suite, std::string check, std::string identity,
                   const std::function<bool()>& body);

void write_report_json(const Report& rows, const std::string& path);

// True when no row failed (skipped rows do not fail a report).
bool all_passed(const Report& rows);

}  // namespace qspair
