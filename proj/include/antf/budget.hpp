#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace antf {

/// Wall-clock deadline plus a step counter, shared by every worker of one
/// computation. charge() throws BudgetExceeded once either limit is hit.
class Budget {
public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;  // unlimited
  Budget(std::optional<std::chrono::duration<double>> wall, std::uint64_t max_steps = 0);

  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  void charge(std::uint64_t steps = 1) const;
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t steps() const { return steps_.load(std::memory_order_relaxed); }

private:
  std::optional<Clock::time_point> deadline_;
  std::uint64_t max_steps_ = 0;
  mutable std::atomic<std::uint64_t> steps_{0};
  mutable std::atomic<bool> exhausted_{false};
};

inline void charge(const Budget* budget, std::uint64_t steps = 1) {
  if (budget) budget->charge(steps);
}

}  // namespace antf
