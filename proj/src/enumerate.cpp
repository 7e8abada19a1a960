#include "nsg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "nsg/error.hpp"

namespace nsg {

namespace {

void check_frobenius_domain(int f, const EnumerationBudget& budget) {
  if (f < 1) throw Error(ErrorCode::DomainError, "Frobenius number must be >= 1");
  if (f > kMaxSearchFrobenius) {
    throw Error(ErrorCode::DomainError,
                "Frobenius search supports f <= " + std::to_string(kMaxSearchFrobenius));
  }
  if (f > budget.max_n) {
    throw Error(ErrorCode::BudgetExceeded,
                "n = " + std::to_string(f) + " exceeds max_n = " + std::to_string(budget.max_n));
  }
}

// Members of [0, f] restricted closure of M ∪ {x}, given M already closed:
// every element is a + kx with a ∈ M.
inline std::uint64_t adjoin(std::uint64_t closure, int x, std::uint64_t full) {
  std::uint64_t result = closure;
  for (std::uint64_t shifted = (closure << x) & full; shifted != 0; shifted = (shifted << x) & full) {
    result |= shifted;
  }
  return result;
}

class FrobeniusSearch {
 public:
  explicit FrobeniusSearch(int f)
      : f_(f), full_((std::uint64_t{1} << (f + 1)) - 1), fbit_(std::uint64_t{1} << f) {}

  // Skips positions already forced into the closure.
  SearchPrefix normalize(SearchPrefix p) const {
    while (p.next < f_ && ((p.closure >> p.next) & 1U)) ++p.next;
    return p;
  }

  bool is_leaf(const SearchPrefix& p) const { return p.next >= f_; }

  // Children of a normalized, non-leaf prefix in canonical order.
  int children(const SearchPrefix& p, SearchPrefix out[2]) const {
    int count = 0;
    const int x = p.next;
    if (((p.closure >> (f_ - x)) & 1U) == 0) {
      const auto with = adjoin(p.closure, x, full_);
      if ((with & fbit_) == 0) out[count++] = normalize({x + 1, with});
    }
    out[count++] = normalize({x + 1, p.closure});
    return count;
  }

  template <class Leaf>
  void run(int x, std::uint64_t closure, Leaf& leaf, BudgetMeter& meter) const {
    while (x < f_ && ((closure >> x) & 1U)) ++x;
    if (x >= f_) {
      leaf(closure);
      return;
    }
    meter.tick();
    // x joins the set unless that would force f in.
    if (((closure >> (f_ - x)) & 1U) == 0) {
      const auto with = adjoin(closure, x, full_);
      if ((with & fbit_) == 0) run(x + 1, with, leaf, meter);
    }
    run(x + 1, closure, leaf, meter);
  }

  int frobenius() const { return f_; }

 private:
  int f_;
  std::uint64_t full_;
  std::uint64_t fbit_;
};

// Runs job(i) for i in [0, count) on up to `threads` workers and rethrows
// the first failure.
template <class Job>
void run_indexed(std::size_t count, unsigned threads, Job job) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      if (failed.load()) return;
      const auto i = next.fetch_add(1);
      if (i >= count) return;
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(threads, count);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<int> divisors_of(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::uint64_t multiples_mask(int d, int f) {
  std::uint64_t mask = 0;
  for (int x = 0; x <= f; x += d) mask |= std::uint64_t{1} << x;
  return mask;
}

}  // namespace

// ---------------------------------------------------------------------------
// FrobeniusWord

int FrobeniusWord::multiplicity() const noexcept {
  const auto rest = members & ~std::uint64_t{1};
  return rest == 0 ? frobenius + 1 : std::countr_zero(rest);
}

int FrobeniusWord::extended_left_gcd() const noexcept {
  int g = frobenius;
  for (auto rest = members & ~std::uint64_t{1}; rest != 0 && g > 1; rest &= rest - 1) {
    g = std::gcd(g, std::countr_zero(rest));
  }
  return g;
}

NumericalSemigroup FrobeniusWord::to_semigroup() const {
  return NumericalSemigroup::from_word(frobenius, members);
}

// ---------------------------------------------------------------------------
// Search space splitting

std::vector<SearchPrefix> split_for_parallel(int f, int k) {
  if (f < 1 || f > kMaxSearchFrobenius) throw Error(ErrorCode::DomainError, "split_for_parallel: bad f");
  if (k < 1) throw Error(ErrorCode::DomainError, "split_for_parallel: k must be >= 1");
  FrobeniusSearch search(f);
  std::vector<SearchPrefix> level{search.normalize({1, 1})};
  while (static_cast<int>(level.size()) < k) {
    std::vector<SearchPrefix> next;
    bool expanded = false;
    for (const auto& p : level) {
      if (search.is_leaf(p)) {
        next.push_back(p);
        continue;
      }
      SearchPrefix kids[2];
      const int n = search.children(p, kids);
      next.insert(next.end(), kids, kids + n);
      expanded = true;
    }
    level = std::move(next);
    if (!expanded) break;
  }
  return level;
}

std::int64_t enumerate_prefix(int f, const SearchPrefix& prefix, const WordVisitor& visit,
                              BudgetState& budget) {
  FrobeniusSearch search(f);
  BudgetMeter meter(budget);
  std::int64_t count = 0;
  auto leaf = [&](std::uint64_t closure) {
    ++count;
    if (visit) visit(FrobeniusWord{f, closure});
  };
  search.run(prefix.next, prefix.closure, leaf, meter);
  meter.flush();
  return count;
}

// ---------------------------------------------------------------------------
// Enumeration by Frobenius number

std::int64_t enumerate_frobenius_words(int f, const WordVisitor& visit,
                                       const EnumerationOptions& options) {
  check_frobenius_domain(f, options.budget);
  BudgetState budget(options.budget);
  if (options.threads <= 1) return enumerate_prefix(f, {1, 1}, visit, budget);

  const auto prefixes = split_for_parallel(f, static_cast<int>(options.threads) * 8);

  // Workers buffer each prefix's words; this thread replays them in prefix
  // order so the caller observes one canonical stream.
  struct Slot {
    bool ready = false;
    std::vector<std::uint64_t> words;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(prefixes.size());
  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const auto i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      Slot local;
      try {
        enumerate_prefix(f, prefixes[i], [&](const FrobeniusWord& w) { local.words.push_back(w.members); },
                         budget);
      } catch (...) {
        local.error = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        slots[i].words = std::move(local.words);
        slots[i].error = local.error;
        slots[i].ready = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(options.threads, prefixes.size());
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);

  std::int64_t total = 0;
  std::exception_ptr error;
  for (std::size_t i = 0; i < prefixes.size() && !error; ++i) {
    std::vector<std::uint64_t> words;
    {
      std::unique_lock lock(mutex);
      cv.wait(lock, [&] { return slots[i].ready; });
      if (slots[i].error) {
        error = slots[i].error;
        break;
      }
      words = std::move(slots[i].words);
    }
    try {
      for (auto w : words) {
        ++total;
        if (visit) visit(FrobeniusWord{f, w});
      }
    } catch (...) {
      error = std::current_exception();
    }
  }
  stop.store(true);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return total;
}

std::int64_t enumerate_by_frobenius(int f, const SemigroupVisitor& visit,
                                    const EnumerationOptions& options) {
  return enumerate_frobenius_words(
      f, [&](const FrobeniusWord& w) { if (visit) visit(w.to_semigroup()); }, options);
}

FrobeniusCensus census_by_frobenius(int f, const EnumerationOptions& options) {
  check_frobenius_domain(f, options.budget);
  BudgetState budget(options.budget);

  auto divisors = divisors_of(f);
  std::reverse(divisors.begin(), divisors.end());
  std::vector<std::uint64_t> off_multiples;
  for (int d : divisors) off_multiples.push_back(~multiples_mask(d, f));

  const auto prefixes = split_for_parallel(f, std::max(1, static_cast<int>(options.threads) * 8));
  std::vector<std::vector<std::int64_t>> partial(prefixes.size(),
                                                 std::vector<std::int64_t>(divisors.size(), 0));

  run_indexed(prefixes.size(), options.threads, [&](std::size_t i) {
    FrobeniusSearch search(f);
    BudgetMeter meter(budget);
    auto& counts = partial[i];
    // gcd(L̄) is the largest divisor d of f whose multiples contain every member.
    auto leaf = [&](std::uint64_t closure) {
      for (std::size_t j = 0; j < divisors.size(); ++j) {
        if ((closure & off_multiples[j]) == 0) {
          ++counts[j];
          return;
        }
      }
    };
    search.run(prefixes[i].next, prefixes[i].closure, leaf, meter);
    meter.flush();
  });

  FrobeniusCensus census{.frobenius = f, .total = 0, .by_divisor = {}};
  for (int d : divisors) census.by_divisor[d] = 0;
  for (const auto& counts : partial) {
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      census.by_divisor[divisors[j]] += counts[j];
      census.total += counts[j];
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// Enumeration by maximum primitive

std::int64_t count_by_max_primitive(int n, const EnumerationOptions& options) {
  return census_by_frobenius(n, options).by_divisor.at(1);
}

std::int64_t enumerate_by_max_primitive(int n, const SemigroupVisitor& visit,
                                        const EnumerationOptions& options) {
  std::int64_t count = 0;
  enumerate_frobenius_words(
      n,
      [&](const FrobeniusWord& w) {
        if (w.extended_left_gcd() != 1) return;
        std::vector<int> gens{n};
        for (auto rest = w.members & ~std::uint64_t{1}; rest != 0; rest &= rest - 1) {
          gens.push_back(std::countr_zero(rest));
        }
        auto s = from_generators(GeneratorSet(std::move(gens)));
        if (s.max_primitive() != n) {
          throw Error(ErrorCode::VerificationFailed,
                      "pull-back of a Frobenius word has max primitive " +
                          std::to_string(s.max_primitive()) + " instead of " + std::to_string(n));
        }
        ++count;
        if (visit) visit(s);
      },
      options);
  return count;
}

std::map<int, std::vector<NumericalSemigroup>> enumerate_by_frobenius_partitioned(
    int f, const EnumerationOptions& options) {
  std::map<int, std::vector<NumericalSemigroup>> classes;
  for (int d : divisors_of(f)) classes[d];
  enumerate_frobenius_words(
      f, [&](const FrobeniusWord& w) { classes[w.extended_left_gcd()].push_back(w.to_semigroup()); },
      options);
  return classes;
}

// ---------------------------------------------------------------------------
// Enumeration by genus

namespace {

void genus_walk(const NumericalSemigroup& s, int depth, int target, const SemigroupVisitor& visit,
                std::int64_t& count, BudgetMeter& meter) {
  meter.tick();
  if (depth == target) {
    ++count;
    if (visit) visit(s);
    return;
  }
  for (int p : s.primitives()) {
    if (p > s.frobenius()) genus_walk(s.remove_primitive(p), depth + 1, target, visit, count, meter);
  }
}

}  // namespace

std::int64_t enumerate_by_genus(int g, const SemigroupVisitor& visit, const EnumerationOptions& options) {
  if (g < 0) throw Error(ErrorCode::DomainError, "genus must be >= 0");
  if (g > options.budget.max_n) {
    throw Error(ErrorCode::BudgetExceeded,
                "g = " + std::to_string(g) + " exceeds max_n = " + std::to_string(options.budget.max_n));
  }
  BudgetState budget(options.budget);
  BudgetMeter meter(budget);
  std::int64_t count = 0;
  genus_walk(NumericalSemigroup::naturals(), 0, g, visit, count, meter);
  meter.flush();
  return count;
}

}  // namespace nsg
