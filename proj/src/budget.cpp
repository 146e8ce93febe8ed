#include "antf/budget.hpp"

#include "antf/error.hpp"

namespace antf {

Budget::Budget(std::optional<std::chrono::duration<double>> wall, std::uint64_t max_steps)
    : max_steps_(max_steps) {
  if (wall) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*wall);
}

void Budget::charge(std::uint64_t steps) const {
  if (exhausted_.load(std::memory_order_relaxed)) throw BudgetExceeded("budget exhausted");
  const std::uint64_t before = steps_.fetch_add(steps, std::memory_order_relaxed);
  const std::uint64_t after = before + steps;
  if (max_steps_ != 0 && after > max_steps_) {
    exhausted_ = true;
    throw BudgetExceeded("step budget of " + std::to_string(max_steps_) + " exceeded");
  }
  // Reading the clock on every step dominates the witness search.
  if (deadline_ && (before >> 12) != (after >> 12) && Clock::now() > *deadline_) {
    exhausted_ = true;
    throw BudgetExceeded("wall-clock budget exceeded");
  }
}

}  // namespace antf
