#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsg/bounds.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Wilf quantities of one semigroup: e = |P(S)|, l = |L(S)|; Wilf's
/// inequality is e·l ≥ F+1.
struct WilfReport {
  CanonicalKey key;
  int e = 0;
  int l = 0;
  int f_plus_1 = 0;
  int depth = 0;
  bool wilf_holds = false;
  bool mebd = false;
  bool crit_sqrt3m = false;
};

WilfReport wilf_check(const NumericalSemigroup& s);

/// |S ∩ (m, 2m)|, counted on primitives (the two sets coincide).
int middle_primitive_count(const NumericalSemigroup& s);

/// |S ∩ (m, 2m)|² ≥ 3m. Throws UndefinedForN for the naturals.
bool criterion_sqrt3m(const NumericalSemigroup& s);

enum class DepthClass { AtMostTwo, Three, AtLeastFour };

std::string to_string(DepthClass c);

/// Throws UndefinedForN for the naturals.
DepthClass classify_depth(const NumericalSemigroup& s);

/// Counts of S ∈ A_n by whether |m(S) − n/2| > half_width.
struct DistributionStat {
  int n = 0;
  int half_width = 0;
  std::int64_t inside_count = 0;
  std::int64_t outside_count = 0;
  Rational fraction_outside;
};

DistributionStat multiplicity_distribution(int n, int half_width, const EnumerationOptions& options = {});

/// Fraction of S ∈ A_n with |S ∩ (m, 2m)| < √(3m). Throws EmptyClass when A_n = ∅.
Rational left_primitive_fraction(int n, const EnumerationOptions& options = {});

/// Fraction of S ∈ A_n satisfying Wilf's inequality. Throws EmptyClass when A_n = ∅.
Rational wilf_probability(int n, const EnumerationOptions& options = {});

enum class ScanFamily { MaxPrimitive, Frobenius };

struct WilfScanResult {
  std::int64_t checked = 0;
  std::optional<CanonicalKey> violation;
  std::optional<std::string> violation_generators;
  // Semigroups where criterion_sqrt3m held but Wilf did not; must stay empty.
  std::int64_t criterion_exceptions = 0;
};

/// Checks Wilf's inequality on every semigroup of the family for n in
/// [1, max_n]; stops at the first violation.
WilfScanResult wilf_scan(ScanFamily family, int max_n, const EnumerationOptions& options = {});

/// The interval witness family: B ⊆ A = [m, m + ⌊(m−2)/3⌋] with m ∈ B,
/// |B|² ≥ 3m, 3|B| < m and gcd(B) = 1, giving S = ⟨B⟩.
struct Family9Witness {
  int m = 0;
  std::vector<int> b;
  NumericalSemigroup semigroup = NumericalSemigroup::naturals();
  int interval_frobenius = 0;          // F(⟨A⟩) computed directly
  int interval_frobenius_formula = 0;  // ⌈(m−1)/⌊(m−2)/3⌋⌉·m − 1
  bool criterion = false;
  bool frobenius_above_3m = false;
  bool few_primitives = false;  // 3|P(S)| < m
  bool wilf_holds = false;

  bool verified() const {
    return criterion && frobenius_above_3m && few_primitives && wilf_holds &&
           interval_frobenius == interval_frobenius_formula && interval_frobenius == 4 * m - 1;
  }
};

/// Default selector: the run [m, m + ⌈√(3m)⌉], shortened by one when that
/// would leave 3|B| < m unsatisfied.
std::vector<int> family9_default_selection(int m);

/// Throws PreconditionFailed naming the violated requirement.
Family9Witness construct_family9(int m, std::optional<std::vector<int>> b = std::nullopt);

/// ⌈√x⌉ for x ≥ 0, exact.
long long ceil_sqrt(long long x);

}  // namespace nsg
