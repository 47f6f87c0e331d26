#pragma once

#include "gph/error.hpp"

#include <cstdint>
#include <string>

namespace gph {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Counts search nodes across one or more exhaustive searches and throws
// BudgetExceeded once the limit is passed. Not thread-safe; give each
// concurrent search its own budget.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t limit = kDefaultSearchBudget) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) {
      throw BudgetExceeded("search budget of " + std::to_string(limit_) +
                           " nodes exhausted");
    }
  }

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace gph
