#include "nsg/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "nsg/error.hpp"

namespace nsg {

namespace {

std::optional<long long> env_integer(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::string_view text(raw);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    throw Error(ErrorCode::DomainError,
                std::string("environment variable ") + name + " must be a positive integer");
  }
  return value;
}

}  // namespace

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget budget;
  if (auto v = env_integer("NSG_MAX_N")) budget.max_n = static_cast<int>(*v);
  if (auto v = env_integer("NSG_TIME_CAP_SECS")) budget.time_cap = std::chrono::seconds(*v);
  return budget;
}

BudgetState::BudgetState(const EnumerationBudget& budget) : cap_(budget.node_cap) {
  if (budget.time_cap) deadline_ = std::chrono::steady_clock::now() + *budget.time_cap;
}

void BudgetState::charge(std::uint64_t nodes) {
  const auto total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
  if (cap_ && total > *cap_) {
    throw Error(ErrorCode::BudgetExceeded,
                "node cap of " + std::to_string(*cap_) + " exceeded");
  }
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
    throw Error(ErrorCode::BudgetExceeded, "time cap exceeded");
  }
}

}  // namespace nsg
