#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace nsg {

/// Limits for searches and closure computations. Tripping any of them
/// raises Error(BudgetExceeded); no operation returns a partial result.
struct EnumerationBudget {
  int max_n = 45;
  std::optional<std::uint64_t> node_cap;
  std::optional<std::chrono::milliseconds> time_cap = std::chrono::minutes(10);

  static EnumerationBudget unlimited() {
    return {.max_n = 1 << 20, .node_cap = std::nullopt, .time_cap = std::nullopt};
  }

  /// Default budget overridden by NSG_MAX_N / NSG_TIME_CAP_SECS when set.
  static EnumerationBudget from_environment();
};

/// Consumption shared by all workers of one search.
class BudgetState {
 public:
  explicit BudgetState(const EnumerationBudget& budget);

  // Adds `nodes` to the running total and throws once a cap is crossed.
  void charge(std::uint64_t nodes);
  std::uint64_t nodes() const noexcept { return nodes_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> nodes_{0};
  std::optional<std::uint64_t> cap_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Per-thread meter that batches node counts before charging the shared state.
class BudgetMeter {
 public:
  explicit BudgetMeter(BudgetState& state) : state_(&state) {}

  void tick() {
    if (++pending_ == kBatch) flush();
  }

  // Must be called once the search completes so small caps are honoured.
  void flush() {
    const auto n = pending_;
    pending_ = 0;
    state_->charge(n);
  }

 private:
  static constexpr std::uint64_t kBatch = 1024;
  BudgetState* state_;
  std::uint64_t pending_ = 0;
};

}  // namespace nsg
