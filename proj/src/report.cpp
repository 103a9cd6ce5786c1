#include "qspair/report.hpp"

#include <fstream>
#include <iostream>

#include "json.hpp"
#include "qspair/budget.hpp"
#include "qspair/errors.hpp"

namespace qspair {

CheckLimits& check_limits() {
  static CheckLimits limits;
  return limits;
}

CheckRow run_check(std::string suite, std::string check, std::string identity,
                   const std::function<bool()>& body) {
  CheckRow row;
  row.suite = std::move(suite);
  row.check = std::move(check);
  row.identity = std::move(identity);
  const CheckLimits& limits = check_limits();
  Budget budget(limits.term_ceiling, limits.time);
  auto start = std::chrono::steady_clock::now();
  try {
    BudgetScope scope(budget);
    row.status = body() ? "pass" : "fail";
  } catch (const BudgetExceeded& e) {
    row.status = "skipped";
    std::cerr << "note: " << row.suite << "/" << row.check << "/"
              << row.identity << " skipped: "
              << (e.kind == BudgetExceeded::Kind::Terms ? "term ceiling"
                                                        : "time budget")
              << " reached\n";
  } catch (const DegreeCapError& e) {
    row.status = "skipped";
    std::cerr << "note: " << row.suite << "/" << row.check << "/"
              << row.identity << " skipped: " << e.what()
              << " (raise --degree-cap to attempt this check)\n";
  }
  row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  row.max_terms = budget.max_terms();
  return row;
}

void write_report_json(const Report& rows, const std::string& path) {
  nlohmann::json out = nlohmann::json::array();
  for (const CheckRow& row : rows) {
    out.push_back({{"suite", row.suite},
                   {"check", row.check},
                   {"identity", row.identity},
                   {"status", row.status},
                   {"ms", row.ms},
                   {"max_terms", row.max_terms}});
  }
  std::ofstream os(path);
  if (!os) throw Error("cannot write report file " + path);
  os << out.dump(2) << "\n";
}

bool all_passed(const Report& rows) {
  for (const CheckRow& row : rows)
    if (row.status == "fail") return false;
  return true;
}

}  // namespace qspair
