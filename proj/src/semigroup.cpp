#include "nsg/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "nsg/error.hpp"

namespace nsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUnitGcd: return "NonUnitGcd";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UndefinedForN: return "UndefinedForN";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::DivisorMismatch: return "DivisorMismatch";
    case ErrorCode::MissingTableEntry: return "MissingTableEntry";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvalidSemigroup: return "InvalidSemigroup";
    case ErrorCode::ListTooLarge: return "ListTooLarge";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
  }
  return "Error";
}

namespace {

std::size_t word_count(int frobenius) { return static_cast<std::size_t>(frobenius + 2 + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& words, int i) {
  words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

void clear_bit(std::vector<std::uint64_t>& words, int i) {
  words[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

}  // namespace

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet::GeneratorSet(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::DomainError, "generator set is empty");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.front() < 1) throw Error(ErrorCode::DomainError, "generators must be positive");
}

int GeneratorSet::gcd() const noexcept {
  int g = 0;
  for (int e : elements_) g = std::gcd(g, e);
  return g;
}

// ---------------------------------------------------------------------------
// CanonicalKey

std::string CanonicalKey::to_string() const {
  std::ostringstream out;
  out << "F" << frobenius << ":";
  out << std::hex;
  for (std::size_t i = 0; i < words.size(); ++i) out << (i ? "." : "") << words[i];
  return out.str();
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.frobenius);
  for (auto w : key.words) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// NumericalSemigroup

NumericalSemigroup::NumericalSemigroup(int frobenius, std::vector<std::uint64_t> words)
    : frobenius_(frobenius), words_(std::move(words)) {
  compute_invariants();
}

NumericalSemigroup NumericalSemigroup::naturals() { return NumericalSemigroup(-1, {1}); }

NumericalSemigroup NumericalSemigroup::ordinary(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "ordinary semigroup needs n >= 1");
  if (n == 1) return naturals();
  const int f = n - 1;
  std::vector<std::uint64_t> words(word_count(f), 0);
  set_bit(words, 0);
  set_bit(words, f + 1);
  return NumericalSemigroup(f, std::move(words));
}

NumericalSemigroup NumericalSemigroup::from_word(int frobenius, std::uint64_t members) {
  if (frobenius < -1 || frobenius > 62) {
    throw Error(ErrorCode::DomainError, "word form supports Frobenius numbers in [-1, 62]");
  }
  if (frobenius == -1) return naturals();
  const std::uint64_t full = (std::uint64_t{1} << (frobenius + 1)) - 1;
  members &= full;
  if ((members & 1U) == 0) throw Error(ErrorCode::InvalidSemigroup, "0 must be a member");
  if ((members >> frobenius) & 1U) throw Error(ErrorCode::InvalidSemigroup, "F must not be a member");
  for (std::uint64_t rest = members & ~std::uint64_t{1}; rest != 0; rest &= rest - 1) {
    const int a = std::countr_zero(rest);
    if (((members << a) & full) & ~members) {
      throw Error(ErrorCode::InvalidSemigroup, "membership word is not closed under addition");
    }
  }
  std::vector<std::uint64_t> words{members | (std::uint64_t{1} << (frobenius + 1))};
  return NumericalSemigroup(frobenius, std::move(words));
}

NumericalSemigroup NumericalSemigroup::from_predicate(int limit,
                                                      const std::function<bool(int)>& is_member) {
  if (limit < 0) throw Error(ErrorCode::DomainError, "negative membership limit");
  if (limit > 0 && !is_member(0)) throw Error(ErrorCode::InvalidSemigroup, "0 must be a member");
  std::vector<char> member(static_cast<std::size_t>(limit));
  int frobenius = -1;
  for (int x = 0; x < limit; ++x) {
    member[x] = is_member(x) ? 1 : 0;
    if (!member[x]) frobenius = x;
  }
  std::vector<std::uint64_t> words(word_count(frobenius), 0);
  for (int x = 0; x <= frobenius; ++x)
    if (member[x]) set_bit(words, x);
  set_bit(words, frobenius + 1);
  NumericalSemigroup s(frobenius, std::move(words));
  if (!s.closed_under_addition()) {
    throw Error(ErrorCode::InvalidSemigroup, "membership is not closed under addition");
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::from_extended_left(std::span<const int> extended_left) {
  if (extended_left.empty()) throw Error(ErrorCode::InvalidSemigroup, "empty extended left set");
  std::vector<int> sorted(extended_left.begin(), extended_left.end());
  std::sort(sorted.begin(), sorted.end());
  const int f = sorted.back();
  if (sorted.front() != 0 || f < 1) {
    throw Error(ErrorCode::InvalidSemigroup, "extended left set must contain 0 and F >= 1");
  }
  sorted.pop_back();
  return from_predicate(f + 1, [&](int x) { return std::binary_search(sorted.begin(), sorted.end(), x); });
}

void NumericalSemigroup::compute_invariants() {
  genus_ = 0;
  left_count_ = 0;
  for (int x = 0; x < frobenius_; ++x) {
    if (contains(x)) ++left_count_;
  }
  genus_ = frobenius_ < 0 ? 0 : frobenius_ + 1 - left_count_;

  multiplicity_ = 1;
  while (!contains(multiplicity_)) ++multiplicity_;

  // Primitives lie in [m, F+m]: anything larger is m plus a member.
  const int m = multiplicity_;
  const int top = frobenius_ < 0 ? m : frobenius_ + m;
  std::vector<int> nonzero;
  for (int x = m; x <= top; ++x)
    if (contains(x)) nonzero.push_back(x);
  primitives_.clear();
  for (int s : nonzero) {
    bool decomposable = false;
    for (int a : nonzero) {
      if (2 * a > s) break;
      if (contains(s - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) primitives_.push_back(s);
  }
}

bool NumericalSemigroup::closed_under_addition() const {
  if (!contains(0) || (frobenius_ >= 0 && contains(frobenius_))) return false;
  std::vector<int> members;
  for (int x = 1; x < frobenius_; ++x)
    if (contains(x)) members.push_back(x);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const int sum = members[i] + members[j];
      if (sum > frobenius_) break;
      if (!contains(sum)) return false;
    }
  }
  return true;
}

std::vector<int> NumericalSemigroup::left_elements() const {
  std::vector<int> out;
  for (int x = 0; x < frobenius_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::vector<int> NumericalSemigroup::extended_left_elements() const {
  if (is_naturals()) throw Error(ErrorCode::UndefinedForN, "extended left elements of the naturals");
  auto out = left_elements();
  out.push_back(frobenius_);
  return out;
}

int NumericalSemigroup::extended_left_gcd() const {
  if (is_naturals()) throw Error(ErrorCode::UndefinedForN, "gcd of extended left elements of the naturals");
  int g = frobenius_;
  for (int x = 1; x < frobenius_ && g > 1; ++x)
    if (contains(x)) g = std::gcd(g, x);
  return g;
}

std::vector<int> NumericalSemigroup::members_through_conductor() const {
  std::vector<int> out;
  for (int x = 0; x <= frobenius_ + 1; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

NumericalSemigroup NumericalSemigroup::remove_primitive(int p) const {
  if (p <= frobenius_ || !std::binary_search(primitives_.begin(), primitives_.end(), p)) {
    throw Error(ErrorCode::PreconditionFailed,
                std::to_string(p) + " is not a primitive above the Frobenius number");
  }
  std::vector<std::uint64_t> words(word_count(p), 0);
  for (int x = 0; x < p; ++x)
    if (contains(x)) set_bit(words, x);
  set_bit(words, p + 1);
  return NumericalSemigroup(p, std::move(words));
}

bool NumericalSemigroup::check_invariants() const {
  if (!closed_under_addition()) return false;
  if (!contains(frobenius_ + 1)) return false;
  int gaps = 0;
  for (int x = 1; x <= frobenius_; ++x)
    if (!contains(x)) ++gaps;
  if (gaps != genus_ || left_count_ + genus_ != frobenius_ + 1) return false;

  // Brute-force S* ∖ (S* + S*) over a window that safely covers every primitive.
  std::vector<int> brute;
  const int window = 2 * frobenius_ + 2 * multiplicity_ + 2;
  for (int s = 1; s <= window; ++s) {
    if (!contains(s)) continue;
    bool sum = false;
    for (int a = 1; a < s && !sum; ++a) sum = contains(a) && contains(s - a);
    if (!sum) brute.push_back(s);
  }
  if (brute != primitives_) return false;

  int g = 0;
  for (int p : primitives_) g = std::gcd(g, p);
  if (g != 1) return false;
  if (primitives_.front() != multiplicity_) return false;
  if (frobenius_ >= 1 && primitives_.back() > 2 * frobenius_ + 1) return false;
  std::vector<char> residue(static_cast<std::size_t>(multiplicity_), 0);
  for (int p : primitives_) {
    if (residue[p % multiplicity_]++) return false;
  }
  return true;
}

CanonicalKey NumericalSemigroup::canonical_key() const {
  CanonicalKey key{.frobenius = frobenius_, .words = {}};
  if (is_naturals()) return key;
  key.words = words_;
  clear_bit(key.words, frobenius_ + 1);
  set_bit(key.words, frobenius_);
  if (key.words.size() > word_count(frobenius_ - 1)) key.words.resize(word_count(frobenius_ - 1));
  return key;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < primitives_.size(); ++i) out << (i ? "," : "") << primitives_[i];
  out << ">";
  return out.str();
}

// ---------------------------------------------------------------------------
// Free functions

NumericalSemigroup from_generators(const GeneratorSet& gens, const EnumerationBudget& budget) {
  if (gens.gcd() != 1) {
    throw Error(ErrorCode::NonUnitGcd, "generators have gcd " + std::to_string(gens.gcd()));
  }
  const auto& g = gens.elements();
  const int m = g.front();
  if (m == 1) return NumericalSemigroup::naturals();

  // Sieve upward until m consecutive members appear; beyond that run every
  // integer is a member.
  BudgetState state(budget);
  BudgetMeter meter(state);
  std::vector<char> member{1};
  int run = 1;
  int x = 0;
  while (run < m) {
    ++x;
    meter.tick();
    bool in = false;
    for (int e : g) {
      if (e > x) break;
      if (member[x - e]) {
        in = true;
        break;
      }
    }
    member.push_back(in ? 1 : 0);
    run = in ? run + 1 : 0;
  }
  meter.flush();
  const int frobenius = x - m;
  return NumericalSemigroup::from_predicate(frobenius + 1, [&](int y) { return member[y] != 0; });
}

std::vector<int> minimal_generators(const NumericalSemigroup& s) { return s.primitives(); }

std::vector<int> left_elements(const NumericalSemigroup& s) { return s.left_elements(); }

std::vector<int> extended_left_elements(const NumericalSemigroup& s) {
  return s.extended_left_elements();
}

DepthPair depth_pair(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorCode::UndefinedForN, "depth of the naturals");
  const int m = s.multiplicity();
  return {.depth = static_cast<int>(ceil_div(s.frobenius() + 1, m)),
          .pdepth = static_cast<int>(ceil_div(s.max_primitive(), m))};
}

int depth_or_zero(const NumericalSemigroup& s) noexcept {
  return s.is_naturals() ? 0 : static_cast<int>(ceil_div(s.frobenius() + 1, s.multiplicity()));
}

NumericalSemigroup quotient(const NumericalSemigroup& s, int d) {
  if (d < 1) throw Error(ErrorCode::DomainError, "quotient needs d >= 1");
  if (d == 1 || s.is_naturals()) return s;
  const int limit = s.frobenius() / d + 1;
  return NumericalSemigroup::from_predicate(limit, [&](int x) { return s.contains(1LL * d * x); });
}

bool is_max_embedding_dim(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorCode::UndefinedForN, "embedding dimension test on the naturals");
  return s.embedding_dimension() == s.multiplicity();
}

}  // namespace nsg
