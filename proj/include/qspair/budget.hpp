#pragma once

#include <chrono>
#include <cstddef>
#include <limits>

#include "qspair/errors.hpp"

namespace qspair {

// Per-check resource guard. Element-level operations report the sizes of the
// expressions they produce; the guard records the high-water mark (telemetry
// for reports) and aborts the computation with BudgetExceeded once the
// configured term ceiling or deadline is passed. Guards are installed
// per-thread with BudgetScope, so parallel checks account independently.
class Budget {
 public:
  Budget(std::size_t term_ceiling, std::chrono::milliseconds time_budget)
      : term_ceiling_(term_ceiling ? term_ceiling
                                   : std::numeric_limits<std::size_t>::max()),
        deadline_(std::chrono::steady_clock::now() + time_budget) {}

  static Budget* current() { return current_; }

  // Called by element arithmetic with the term count of a freshly built
  // expression. The clock is only sampled every few hundred calls.
  void note_terms(std::size_t n) {
    if (n > max_terms_) max_terms_ = n;
    if (n > term_ceiling_)
      throw BudgetExceeded(BudgetExceeded::Kind::Terms,
                           "term ceiling exceeded (" + std::to_string(n) +
                               " > " + std::to_string(term_ceiling_) + ")");
    if (++tick_ % 256 == 0 && std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded(BudgetExceeded::Kind::Time,
                           "time budget exceeded");
  }

  std::size_t max_terms() const { return max_terms_; }

 private:
  friend class BudgetScope;
  inline static thread_local Budget* current_ = nullptr;

  std::size_t term_ceiling_;
  std::chrono::steady_clock::time_point deadline_;
  std::size_t max_terms_ = 0;
  std::size_t tick_ = 0;
};

class BudgetScope {
 public:
  explicit BudgetScope(Budget& b) : prev_(Budget::current_) {
    Budget::current_ = &b;
  }
  ~BudgetScope() { Budget::current_ = prev_; }
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  Budget* prev_;
};

inline void note_terms(std::size_t n) {
  if (Budget* b = Budget::current()) b->note_terms(n);
}

}  // namespace qspair
