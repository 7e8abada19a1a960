#include "nsg/transforms.hpp"

#include <string>

#include "nsg/error.hpp"

namespace nsg {

std::vector<int> divisors(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "divisors need n >= 1");
  std::vector<int> small, large;
  for (int d = 1; 1LL * d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "mobius needs n >= 1");
  int result = 1;
  for (int p = 2; 1LL * p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

DivisorProfile divisor_profile(int n) {
  DivisorProfile profile{.n = n, .divisors = divisors(n), .mobius_values = {}};
  for (int d : profile.divisors) profile.mobius_values.push_back(mobius(n / d));
  return profile;
}

NumericalSemigroup phi(const NumericalSemigroup& s) {
  const int n = s.max_primitive();
  return NumericalSemigroup::from_predicate(n + 1, [&](int x) { return x < n && s.contains(x); });
}

NumericalSemigroup phi_inverse(const NumericalSemigroup& t) {
  if (t.is_naturals()) throw Error(ErrorCode::NotInImage, "the naturals have no Frobenius number");
  if (const int g = t.extended_left_gcd(); g != 1) {
    throw Error(ErrorCode::NotInImage, "gcd of extended left elements is " + std::to_string(g));
  }
  auto gens = t.left_elements();
  gens.erase(gens.begin());  // drop 0
  gens.push_back(t.frobenius());
  return from_generators(GeneratorSet(std::move(gens)));
}

NumericalSemigroup delta(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorCode::DivisorMismatch, "delta is undefined on the naturals");
  return quotient(s, s.extended_left_gcd());
}

NumericalSemigroup delta_inverse(const NumericalSemigroup& r, int d, int f) {
  if (d < 1 || r.is_naturals() || 1LL * d * r.frobenius() != f) {
    throw Error(ErrorCode::DivisorMismatch,
                "expected d * F(R) = f with d = " + std::to_string(d) + ", f = " + std::to_string(f));
  }
  if (r.extended_left_gcd() != 1) {
    throw Error(ErrorCode::DivisorMismatch, "R must have gcd(extended left elements) = 1");
  }
  return NumericalSemigroup::from_predicate(f + 1, [&](int x) {
    return x < f && x % d == 0 && r.contains(x / d);
  });
}

std::int64_t n_from_a(int n, const CountTable& a_table) {
  std::int64_t total = 0;
  for (int d : divisors(n)) {
    auto it = a_table.find(n / d);
    if (it == a_table.end()) {
      throw Error(ErrorCode::MissingTableEntry, "A_" + std::to_string(n / d) + " is not in the table");
    }
    total += it->second;
  }
  return total;
}

std::int64_t a_from_n(int n, const CountTable& n_table) {
  if (n < 1) throw Error(ErrorCode::DomainError, "a_from_n needs n >= 1");
  if (n == 1) return 1;
  if (n == 2) return 0;
  std::int64_t total = 0;
  for (int d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    auto it = n_table.find(d);
    if (it == n_table.end()) {
      throw Error(ErrorCode::MissingTableEntry, "N_" + std::to_string(d) + " is not in the table");
    }
    total += mu * it->second;
  }
  return total;
}

}  // namespace nsg
