#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nsg/budget.hpp"

namespace nsg {

/// Nonempty sorted set of positive integers used to describe a semigroup by
/// generators. Coprimality is checked by from_generators, not here.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<int> elements);
  GeneratorSet(std::initializer_list<int> elements)
      : GeneratorSet(std::vector<int>(elements)) {}

  const std::vector<int>& elements() const noexcept { return elements_; }
  int gcd() const noexcept;

 private:
  std::vector<int> elements_;
};

/// Opaque total order on semigroups; equal keys mean equal semigroups.
/// Built from the extended left elements, so it identifies S completely.
struct CanonicalKey {
  int frobenius = -1;
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;

  std::string to_string() const;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

struct DepthPair {
  int depth = 0;
  int pdepth = 0;
};

/// A numerical semigroup S: a cofinite submonoid of the nonnegative
/// integers. Membership is stored densely on [0, F+1]; everything above the
/// Frobenius number is implicitly a member. Values are immutable and all
/// invariants are computed once at construction.
class NumericalSemigroup {
 public:
  /// The semigroup of all nonnegative integers (F = -1).
  static NumericalSemigroup naturals();

  /// O_n = {0} ∪ [n, ∞). O_1 is the naturals.
  static NumericalSemigroup ordinary(int n);

  /// Members of [0, f] packed as bits of `members` (bit i <-> i), f <= 62.
  /// Throws InvalidSemigroup unless 0 is set, f is clear and the set is
  /// closed under sums not exceeding f.
  static NumericalSemigroup from_word(int frobenius, std::uint64_t members);

  /// Membership given by `is_member` below `limit`; every x >= limit is a
  /// member. Validates closure and throws InvalidSemigroup on failure.
  static NumericalSemigroup from_predicate(int limit, const std::function<bool(int)>& is_member);

  /// Rebuilds S from its extended left elements L̄(S) = L(S) ∪ {F}.
  static NumericalSemigroup from_extended_left(std::span<const int> extended_left);

  int frobenius() const noexcept { return frobenius_; }
  int multiplicity() const noexcept { return multiplicity_; }
  int genus() const noexcept { return genus_; }
  const std::vector<int>& primitives() const noexcept { return primitives_; }
  int embedding_dimension() const noexcept { return static_cast<int>(primitives_.size()); }
  int max_primitive() const noexcept { return primitives_.back(); }
  bool is_naturals() const noexcept { return frobenius_ < 0; }

  bool contains(long long x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    const auto i = static_cast<std::size_t>(x);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  /// |L(S)|, the number of members below F. Zero for the naturals.
  int left_count() const noexcept { return left_count_; }

  /// L(S) = S ∩ [0, F).
  std::vector<int> left_elements() const;
  /// L̄(S) = L(S) ∪ {F}; throws UndefinedForN for the naturals.
  std::vector<int> extended_left_elements() const;
  /// gcd of L̄(S); throws UndefinedForN for the naturals.
  int extended_left_gcd() const;

  /// Members of [0, F+1] in increasing order (F+1 is the conductor).
  std::vector<int> members_through_conductor() const;

  /// S ∖ {p} for a primitive p > F; the result has Frobenius number p.
  NumericalSemigroup remove_primitive(int p) const;

  /// Independent check of every representation invariant (closure, gaps,
  /// primitive set); intended for tests and debugging.
  bool check_invariants() const;

  CanonicalKey canonical_key() const;

  bool operator==(const NumericalSemigroup& other) const {
    return frobenius_ == other.frobenius_ && words_ == other.words_;
  }

  std::string to_string() const;

 private:
  NumericalSemigroup(int frobenius, std::vector<std::uint64_t> words);

  void compute_invariants();
  bool closed_under_addition() const;

  int frobenius_ = -1;
  std::vector<std::uint64_t> words_;
  int multiplicity_ = 1;
  int genus_ = 0;
  int left_count_ = 0;
  std::vector<int> primitives_;
};

/// Smallest submonoid containing the generators. Throws NonUnitGcd when the
/// generators are not coprime and BudgetExceeded when the sieve runs past
/// the budget's node cap.
NumericalSemigroup from_generators(const GeneratorSet& gens,
                                   const EnumerationBudget& budget = EnumerationBudget::unlimited());

/// S* ∖ (S* + S*), sorted ascending.
std::vector<int> minimal_generators(const NumericalSemigroup& s);

std::vector<int> left_elements(const NumericalSemigroup& s);
std::vector<int> extended_left_elements(const NumericalSemigroup& s);

/// Depth ⌈(F+1)/m⌉ and primitive depth ⌈max P / min P⌉ in exact integers.
DepthPair depth_pair(const NumericalSemigroup& s);

/// Depth with the convention depth(naturals) = 0.
int depth_or_zero(const NumericalSemigroup& s) noexcept;

/// S/d = {x : d·x ∈ S}.
NumericalSemigroup quotient(const NumericalSemigroup& s, int d);

bool is_max_embedding_dim(const NumericalSemigroup& s);

inline CanonicalKey canonical_key(const NumericalSemigroup& s) { return s.canonical_key(); }

inline constexpr long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace nsg
