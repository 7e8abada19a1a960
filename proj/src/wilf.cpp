#include "nsg/wilf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "nsg/error.hpp"

namespace nsg {

long long ceil_sqrt(long long x) {
  if (x < 0) throw Error(ErrorCode::DomainError, "ceil_sqrt of a negative number");
  long long r = 0;
  while (r * r < x) ++r;
  return r;
}

WilfReport wilf_check(const NumericalSemigroup& s) {
  WilfReport r;
  r.key = s.canonical_key();
  r.e = s.embedding_dimension();
  r.l = s.left_count();
  r.f_plus_1 = s.frobenius() + 1;
  r.depth = depth_or_zero(s);
  r.wilf_holds = 1LL * r.e * r.l >= r.f_plus_1;
  r.mebd = r.e == s.multiplicity();
  r.crit_sqrt3m = !s.is_naturals() && criterion_sqrt3m(s);
  return r;
}

int middle_primitive_count(const NumericalSemigroup& s) {
  const int m = s.multiplicity();
  const auto& p = s.primitives();
  return static_cast<int>(std::count_if(p.begin(), p.end(), [m](int x) { return m < x && x < 2 * m; }));
}

bool criterion_sqrt3m(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorCode::UndefinedForN, "criterion on the naturals");
  const long long count = middle_primitive_count(s);
  return count * count >= 3LL * s.multiplicity();
}

std::string to_string(DepthClass c) {
  switch (c) {
    case DepthClass::AtMostTwo: return "depth<=2";
    case DepthClass::Three: return "depth=3";
    case DepthClass::AtLeastFour: return "depth>=4";
  }
  return "?";
}

DepthClass classify_depth(const NumericalSemigroup& s) {
  const int q = depth_pair(s).depth;
  if (q <= 2) return DepthClass::AtMostTwo;
  if (q == 3) return DepthClass::Three;
  return DepthClass::AtLeastFour;
}

DistributionStat multiplicity_distribution(int n, int half_width, const EnumerationOptions& options) {
  if (half_width < 0) throw Error(ErrorCode::DomainError, "half width must be >= 0");
  DistributionStat stat{.n = n, .half_width = half_width};
  auto tally = [&](int m) {
    if (std::abs(2LL * m - n) > 2LL * half_width) ++stat.outside_count;
    else ++stat.inside_count;
  };
  if (n >= 3) {
    // Φ preserves multiplicity for n ≥ 3, so the Frobenius words suffice.
    enumerate_frobenius_words(
        n, [&](const FrobeniusWord& w) { if (w.extended_left_gcd() == 1) tally(w.multiplicity()); }, options);
  } else {
    enumerate_by_max_primitive(n, [&](const NumericalSemigroup& s) { tally(s.multiplicity()); }, options);
  }
  const auto total = stat.inside_count + stat.outside_count;
  stat.fraction_outside = total == 0 ? Rational(0) : Rational(stat.outside_count, total);
  return stat;
}

Rational left_primitive_fraction(int n, const EnumerationOptions& options) {
  std::int64_t below = 0;
  const auto total = enumerate_by_max_primitive(
      n, [&](const NumericalSemigroup& s) { if (!criterion_sqrt3m(s)) ++below; }, options);
  if (total == 0) throw Error(ErrorCode::EmptyClass, "A_" + std::to_string(n) + " is empty");
  return {below, total};
}

Rational wilf_probability(int n, const EnumerationOptions& options) {
  std::int64_t good = 0;
  const auto total = enumerate_by_max_primitive(
      n, [&](const NumericalSemigroup& s) { if (wilf_check(s).wilf_holds) ++good; }, options);
  if (total == 0) throw Error(ErrorCode::EmptyClass, "A_" + std::to_string(n) + " is empty");
  return {good, total};
}

WilfScanResult wilf_scan(ScanFamily family, int max_n, const EnumerationOptions& options) {
  WilfScanResult result;
  auto check = [&](const NumericalSemigroup& s) {
    if (result.violation) return;
    ++result.checked;
    const auto report = wilf_check(s);
    if (report.crit_sqrt3m && !report.wilf_holds) ++result.criterion_exceptions;
    if (!report.wilf_holds) {
      result.violation = report.key;
      result.violation_generators = s.to_string();
    }
  };
  for (int n = 1; n <= max_n && !result.violation; ++n) {
    if (family == ScanFamily::MaxPrimitive) enumerate_by_max_primitive(n, check, options);
    else enumerate_by_frobenius(n, check, options);
  }
  return result;
}

std::vector<int> family9_default_selection(int m) {
  // B \ {m} is what lands in (m, 2m), so one element beyond ⌈√(3m)⌉ is
  // needed for the criterion. Fall back to the bare size when that run would
  // break 3|B| < m (only small m).
  int size = static_cast<int>(ceil_sqrt(3LL * m)) + 1;
  if (3 * size >= m) --size;
  std::vector<int> b(static_cast<std::size_t>(size));
  std::iota(b.begin(), b.end(), m);
  return b;
}

Family9Witness construct_family9(int m, std::optional<std::vector<int>> selection) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::PreconditionFailed, why); };
  if (m <= 30) fail("m must exceed 30");
  const int width = (m - 2) / 3;
  const int top = m + width;

  std::vector<int> b = selection ? std::move(*selection) : family9_default_selection(m);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.empty() || b.front() < m || b.back() > top) {
    fail("B must lie in [" + std::to_string(m) + ", " + std::to_string(top) + "]");
  }
  if (b.front() != m) fail("B must contain m");
  const long long size = static_cast<long long>(b.size());
  if (size * size < 3LL * m) fail("|B|^2 must be at least 3m");
  if (3 * size >= m) fail("|B| must be less than m/3");
  int g = 0;
  for (int x : b) g = std::gcd(g, x);
  if (g != 1) fail("gcd(B) must be 1");

  Family9Witness w;
  w.m = m;
  w.b = b;
  w.semigroup = from_generators(GeneratorSet(b));
  std::vector<int> interval(static_cast<std::size_t>(width + 1));
  std::iota(interval.begin(), interval.end(), m);
  w.interval_frobenius = from_generators(GeneratorSet(interval)).frobenius();
  w.interval_frobenius_formula = static_cast<int>(ceil_div(m - 1, width)) * m - 1;
  w.criterion = criterion_sqrt3m(w.semigroup);
  w.frobenius_above_3m = w.semigroup.frobenius() > 3 * m;
  w.few_primitives = 3 * w.semigroup.embedding_dimension() < m;
  w.wilf_holds = wilf_check(w.semigroup).wilf_holds;
  return w;
}

}  // namespace nsg
