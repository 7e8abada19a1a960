#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsg/transforms.hpp"

namespace nsg {

using Rational = boost::rational<std::int64_t>;

/// Outcome of one exact inequality check. `lhs` is the measured quantity,
/// `rhs` the bound it is compared with (`rhs_upper` holds the second bound
/// of a two-sided check). Checks requested outside the domain of the
/// inequality report in_domain = false and holds = false; that is not a
/// violation.
struct BoundCheckResult {
  std::string name;
  int n_or_f = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::optional<std::int64_t> rhs_upper;
  bool holds = false;
  bool in_domain = true;

  std::string to_string() const;
};

std::uint64_t fibonacci(int k);

/// T_a(m): subsets X ⊆ [a+1, a+m] with some x ∈ X such that
/// {x, x+1} ⊆ X ∪ {a+m+1}. Bit i of each mask stands for a+1+i.
std::vector<std::uint32_t> t_set_enumerate(int a, int m);
std::vector<int> t_set_members(int a, std::uint32_t mask);

/// 2^m − F_{m+1}.
std::int64_t t_set_cardinality(int m);

/// The family attached to n > 2: T_a(m) with m = ⌊(n−1)/2⌋ placed on the
/// window (n/2, n), i.e. a = n − 1 − m, so that a + m + 1 = n.
int t_family_offset(int n);

/// 2^⌊(f−1)/2⌋ < N_f < 4·2^⌊(f−1)/2⌋ (strict on both sides). f = 1 is flagged
/// out of domain.
BoundCheckResult check_backelin(int f, std::int64_t n_f);

/// A_n ≥ 2^k − F_{k+1} with k = ⌊(n−1)/2⌋; throws DomainError for n < 3.
BoundCheckResult check_fibonacci_lower(int n, std::int64_t a_n);

/// 4·A_n ≥ 3·2^⌊(n−1)/2⌋; throws DomainError for n < 8.
BoundCheckResult check_bertrand_lower(int n, std::int64_t a_n);

/// d(n)² < 4n.
BoundCheckResult check_divisor_bound(int n);

/// For each divisor d ≥ 2 of n: N_{n/d} ≤ 2√2·2^{n/4}, checked exactly as
/// N^4 ≤ 2^{n+6}. The final entry is the aggregate N_n − A_n ≤ 4√(2n)·2^{n/4},
/// checked as (N_n − A_n)^4 ≤ 1024·n²·2^n. `rhs` reports the bound rounded up.
std::vector<BoundCheckResult> check_nfd_upper(int n, const CountTable& a_table, const CountTable& n_table);

struct RatioRow {
  int n = 0;
  Rational ratio;  // A_n / N_n
};

std::vector<RatioRow> ratio_report(int max_n, const CountTable& a_table, const CountTable& n_table);

}  // namespace nsg
