#include "nsg/bounds.hpp"

#include <sstream>

#include "nsg/error.hpp"

namespace nsg {

namespace {

using Wide = unsigned __int128;

Wide pow4(std::int64_t x) {
  const Wide w = static_cast<Wide>(x);
  return w * w * w * w;
}

// Smallest c >= 0 with c^4 >= target.
std::int64_t ceil_fourth_root(Wide target) {
  std::int64_t lo = 0, hi = 1;
  while (pow4(hi) < target) hi *= 2;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (pow4(mid) >= target) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

std::int64_t lookup(const CountTable& table, int key, const char* name) {
  auto it = table.find(key);
  if (it == table.end()) {
    throw Error(ErrorCode::MissingTableEntry, std::string(name) + "_" + std::to_string(key) + " is not in the table");
  }
  return it->second;
}

}  // namespace

std::string BoundCheckResult::to_string() const {
  std::ostringstream out;
  out << name << " n=" << n_or_f << " lhs=" << lhs << " rhs=" << rhs;
  if (rhs_upper) out << " rhs_upper=" << *rhs_upper;
  out << (in_domain ? (holds ? " holds" : " VIOLATED") : " out-of-domain");
  return out.str();
}

std::uint64_t fibonacci(int k) {
  if (k < 0 || k > 93) throw Error(ErrorCode::DomainError, "fibonacci index must be in [0, 93]");
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    const auto next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::vector<std::uint32_t> t_set_enumerate(int a, int m) {
  (void)a;  // the count and shape are independent of the offset
  if (m < 1 || m > 30) throw Error(ErrorCode::DomainError, "t_set_enumerate needs 1 <= m <= 30");
  const std::uint32_t top = std::uint32_t{1} << (m - 1);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    // Some x ∈ X has x+1 ∈ X, or x is the last slot (x+1 = a+m+1).
    if ((mask & (mask >> 1)) != 0 || (mask & top) != 0) out.push_back(mask);
  }
  return out;
}

std::vector<int> t_set_members(int a, std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((mask >> i) & 1U) out.push_back(a + 1 + i);
  return out;
}

std::int64_t t_set_cardinality(int m) {
  if (m < 1 || m > 62) throw Error(ErrorCode::DomainError, "t_set_cardinality needs 1 <= m <= 62");
  return (std::int64_t{1} << m) - static_cast<std::int64_t>(fibonacci(m + 1));
}

int t_family_offset(int n) {
  if (n < 3) throw Error(ErrorCode::DomainError, "the T family needs n > 2");
  const int m = (n - 1) / 2;
  return n - 1 - m;
}

BoundCheckResult check_backelin(int f, std::int64_t n_f) {
  if (f < 1 || f > 60) throw Error(ErrorCode::DomainError, "check_backelin needs 1 <= f <= 60");
  const std::int64_t base = std::int64_t{1} << ((f - 1) / 2);
  BoundCheckResult r{.name = "backelin", .n_or_f = f, .lhs = n_f, .rhs = base,
                     .rhs_upper = 4 * base, .holds = false, .in_domain = true};
  r.holds = base < n_f && n_f < 4 * base;
  // N_1 = 1 = 2^0 sits on the lower end; f = 1 is reported, not judged.
  r.in_domain = f >= 2;
  return r;
}

BoundCheckResult check_fibonacci_lower(int n, std::int64_t a_n) {
  if (n < 3) throw Error(ErrorCode::DomainError, "the Fibonacci lower bound needs n >= 3");
  const int k = (n - 1) / 2;
  const auto bound = (std::int64_t{1} << k) - static_cast<std::int64_t>(fibonacci(k + 1));
  return {.name = "fibonacci-lower", .n_or_f = n, .lhs = a_n, .rhs = bound,
          .rhs_upper = std::nullopt, .holds = a_n >= bound, .in_domain = true};
}

BoundCheckResult check_bertrand_lower(int n, std::int64_t a_n) {
  if (n < 8) throw Error(ErrorCode::DomainError, "the Bertrand lower bound needs n >= 8");
  const int k = (n - 1) / 2;
  // A_n ≥ (3/4)·2^k  ⇔  4·A_n ≥ 3·2^k; rhs reported as ⌈(3/4)·2^k⌉.
  const std::int64_t three_pow = 3 * (std::int64_t{1} << k);
  return {.name = "bertrand-lower", .n_or_f = n, .lhs = a_n, .rhs = (three_pow + 3) / 4,
          .rhs_upper = std::nullopt, .holds = 4 * a_n >= three_pow, .in_domain = true};
}

BoundCheckResult check_divisor_bound(int n) {
  const auto d = static_cast<std::int64_t>(divisors(n).size());
  return {.name = "divisor-bound", .n_or_f = n, .lhs = d * d, .rhs = 4LL * n,
          .rhs_upper = std::nullopt, .holds = d * d < 4LL * n, .in_domain = true};
}

std::vector<BoundCheckResult> check_nfd_upper(int n, const CountTable& a_table, const CountTable& n_table) {
  if (n < 2 || n > 100) throw Error(ErrorCode::DomainError, "check_nfd_upper needs 2 <= n <= 100");
  std::vector<BoundCheckResult> out;
  const Wide per_divisor = Wide{1} << (n + 6);
  for (int d : divisors(n)) {
    if (d < 2) continue;
    const auto value = lookup(n_table, n / d, "N");
    out.push_back({.name = "nfd-upper d=" + std::to_string(d), .n_or_f = n, .lhs = value,
                   .rhs = ceil_fourth_root(per_divisor), .rhs_upper = std::nullopt,
                   .holds = pow4(value) <= per_divisor, .in_domain = true});
  }
  const auto gap = lookup(n_table, n, "N") - lookup(a_table, n, "A");
  const Wide aggregate = Wide{1024} * static_cast<Wide>(n) * static_cast<Wide>(n) * (Wide{1} << n);
  out.push_back({.name = "nfd-upper aggregate", .n_or_f = n, .lhs = gap,
                 .rhs = ceil_fourth_root(aggregate), .rhs_upper = std::nullopt,
                 .holds = gap >= 0 && pow4(gap) <= aggregate, .in_domain = true});
  return out;
}

std::vector<RatioRow> ratio_report(int max_n, const CountTable& a_table, const CountTable& n_table) {
  std::vector<RatioRow> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto a = lookup(a_table, n, "A");
    const auto total = lookup(n_table, n, "N");
    out.push_back({n, Rational(a, total)});
  }
  return out;
}

}  // namespace nsg
