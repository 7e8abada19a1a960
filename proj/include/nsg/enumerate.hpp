#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "nsg/budget.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Largest Frobenius number the word-level search supports.
inline constexpr int kMaxSearchFrobenius = 62;

/// A semigroup with Frobenius number f, packed as the membership word of
/// [0, f] (bit i set iff i is a member). This is the search's native form;
/// convert with to_semigroup() when the full invariants are needed.
struct FrobeniusWord {
  int frobenius = 0;
  std::uint64_t members = 1;

  int multiplicity() const noexcept;
  /// gcd of the extended left elements (members below f, plus f).
  int extended_left_gcd() const noexcept;
  NumericalSemigroup to_semigroup() const;

  bool operator==(const FrobeniusWord&) const = default;
};

/// A node of the Frobenius search tree: membership of every integer below
/// `next` has been decided and `closure` holds the additive closure
/// (restricted to [0, f]) of the members chosen so far.
struct SearchPrefix {
  int next = 1;
  std::uint64_t closure = 1;

  bool operator==(const SearchPrefix&) const = default;
};

struct EnumerationOptions {
  EnumerationBudget budget = EnumerationBudget::from_environment();
  unsigned threads = 1;
};

using WordVisitor = std::function<void(const FrobeniusWord&)>;
using SemigroupVisitor = std::function<void(const NumericalSemigroup&)>;

/// Disjoint prefixes covering the search space of Frobenius number f, in
/// canonical order. At least k prefixes are produced unless the tree has
/// fewer leaves than that.
std::vector<SearchPrefix> split_for_parallel(int f, int k);

/// Number of semigroups below one prefix; `visit` (optional) sees each of
/// them in canonical order.
std::int64_t enumerate_prefix(int f, const SearchPrefix& prefix, const WordVisitor& visit,
                              BudgetState& budget);

/// Visits every S with F(S) = f exactly once, in canonical order: at each
/// position 1..f-1 the member branch precedes the gap branch. With threads
/// > 1 the prefixes run concurrently but `visit` is still called from one
/// thread at a time and in canonical order. Returns N_f.
std::int64_t enumerate_frobenius_words(int f, const WordVisitor& visit,
                                       const EnumerationOptions& options = {});

std::int64_t enumerate_by_frobenius(int f, const SemigroupVisitor& visit,
                                    const EnumerationOptions& options = {});

/// N_f together with the class sizes N_f(d) for every positive divisor d of
/// f (zero-sized classes included as explicit zeros).
struct FrobeniusCensus {
  int frobenius = 0;
  std::int64_t total = 0;
  std::map<int, std::int64_t> by_divisor;
};

/// Count-only enumeration of N_f and N_f(d); an associative reduction over
/// the prefixes, so the result is independent of the thread count.
FrobeniusCensus census_by_frobenius(int f, const EnumerationOptions& options = {});

/// A_n by counting the Φ-image {T ∈ N_n : gcd(L̄(T)) = 1}; without pulling
/// each member back.
std::int64_t count_by_max_primitive(int n, const EnumerationOptions& options = {});

/// Visits every S with max P(S) = n by enumerating N_n, keeping the
/// gcd-1 class and pulling each T back to ⟨(T ∩ [0, n)) ∪ {n}⟩. Each
/// visited semigroup is re-checked to have max primitive n.
std::int64_t enumerate_by_max_primitive(int n, const SemigroupVisitor& visit,
                                        const EnumerationOptions& options = {});

/// N_f split by d = gcd(L̄(S)); keys are all positive divisors of f.
std::map<int, std::vector<NumericalSemigroup>> enumerate_by_frobenius_partitioned(
    int f, const EnumerationOptions& options = {});

/// Walks the semigroup tree (children remove a primitive above F) down to
/// depth g and visits its level g. Returns n_g.
std::int64_t enumerate_by_genus(int g, const SemigroupVisitor& visit,
                                const EnumerationOptions& options = {});

}  // namespace nsg
