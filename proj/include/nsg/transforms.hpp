#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Sequence values keyed by index, e.g. n -> A_n.
using CountTable = std::map<int, std::int64_t>;

struct DivisorProfile {
  int n = 1;
  std::vector<int> divisors;
  std::vector<int> mobius_values;  // μ(n/d), aligned with divisors
};

std::vector<int> divisors(int n);
int mobius(int n);
DivisorProfile divisor_profile(int n);

/// Φ(S) = (S ∖ {n}) ∪ (n, ∞) where n = max P(S). Φ(naturals) = O_2.
NumericalSemigroup phi(const NumericalSemigroup& s);

/// The unique S with Φ(S) = t, namely ⟨(t ∩ [0, F(t))) ∪ {F(t)}⟩.
/// Throws NotInImage unless gcd(L̄(t)) = 1.
NumericalSemigroup phi_inverse(const NumericalSemigroup& t);

/// δ_d(S) = S/d for d = gcd(L̄(S)); lands in N_{F/d}(1).
NumericalSemigroup delta(const NumericalSemigroup& s);

/// δ_d⁻¹(r) = d·L(r) ∪ (d·F(r), ∞). Requires d·F(r) = f and gcd(L̄(r)) = 1,
/// otherwise throws DivisorMismatch.
NumericalSemigroup delta_inverse(const NumericalSemigroup& r, int d, int f);

/// N_n = Σ_{d|n} A_{n/d}. Throws MissingTableEntry if any A_{n/d} is absent.
std::int64_t n_from_a(int n, const CountTable& a_table);

/// A_n = Σ_{d|n} μ(n/d)·N_d for n > 2; A_1 = 1 and A_2 = 0 by convention.
std::int64_t a_from_n(int n, const CountTable& n_table);

}  // namespace nsg
