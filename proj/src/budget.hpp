#pragma once

#include <cstdint>

#include "error.hpp"

namespace catlim {

// Resource guards for the exhaustive enumerations. Defaults are desk-scale;
// callers can raise them, and the CLI reads CATLIM_ENUM_BUDGET.
struct Budget {
  std::uint64_t enumeration_steps = 10'000'000;  // partial assignments tried
  int partition_ground_bound = 6;                // max n for all_partitions
  int comma_node_budget = 2000;                  // max nodes of a comma diagram

  Budget with_steps(std::uint64_t steps) const {
    Budget b = *this;
    b.enumeration_steps = steps;
    return b;
  }
};

// Shared step counter for one enumeration run.
class StepCounter {
 public:
  explicit StepCounter(std::uint64_t limit) : limit_(limit) {}

  void tick(const char* what) {
    if (++count_ > limit_)
      fail(Errc::budget_exceeded, std::string("enumeration budget exceeded in ") + what);
  }

  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

}  // namespace catlim
