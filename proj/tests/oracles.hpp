#pragma once

// Slow reference implementations used to cross-check the library. Nothing
// here calls into nsg; membership is handled as plain vectors of flags.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace nsg::oracle {

using Members = std::vector<char>;  // Members[x] != 0 iff x is in S, for x < size()

// Closure of the generators, as flags on [0, limit).
inline Members close(const std::vector<int>& gens, int limit) {
  Members in(static_cast<std::size_t>(limit), 0);
  in[0] = 1;
  for (int x = 1; x < limit; ++x)
    for (int g : gens)
      if (g <= x && in[x - g]) {
        in[x] = 1;
        break;
      }
  return in;
}

inline int frobenius(const Members& in) {
  int f = -1;
  for (int x = 0; x < static_cast<int>(in.size()); ++x)
    if (!in[x]) f = x;
  return f;
}

inline int genus(const Members& in) {
  return static_cast<int>(std::count(in.begin(), in.end(), 0));
}

// Nonzero members that are not a sum of two nonzero members.
inline std::vector<int> primitives(const Members& in) {
  std::vector<int> out;
  const int size = static_cast<int>(in.size());
  for (int s = 1; s < size; ++s) {
    if (!in[s]) continue;
    bool split = false;
    for (int a = 1; a < s && !split; ++a) split = in[a] && in[s - a];
    if (!split) out.push_back(s);
  }
  return out;
}

inline std::vector<int> left(const Members& in) {
  std::vector<int> out;
  const int f = frobenius(in);
  for (int x = 0; x < f; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// Members of [0, f], packed as mask bits, for every S with Frobenius number f.
// Tries every subset of [1, f-1] and keeps the closed ones.
inline std::vector<std::uint64_t> frobenius_class(int f) {
  std::vector<std::uint64_t> out;
  const std::uint64_t subsets = std::uint64_t{1} << (f - 1);
  for (std::uint64_t x = 0; x < subsets; ++x) {
    const std::uint64_t t = (x << 1) | 1U;
    bool ok = true;
    for (int a = 0; a <= f && ok; ++a) {
      if (!((t >> a) & 1U)) continue;
      for (int b = a; a + b <= f && ok; ++b)
        if (((t >> b) & 1U) && !((t >> (a + b)) & 1U)) ok = false;
    }
    if (ok) out.push_back(t);
  }
  return out;
}

// Every semigroup whose largest minimal generator is n, as flags on
// [0, n*n + n): all generator sets G ⊆ [1, n] with n ∈ G and gcd 1,
// closed independently and deduplicated. The window exceeds the Frobenius
// number of any such semigroup, which is below (n-1)^2.
inline std::set<Members> max_primitive_class(int n) {
  std::set<Members> out;
  const int limit = n * n + n;
  const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
  for (std::uint32_t x = 0; x < subsets; ++x) {
    std::vector<int> gens;
    for (int i = 0; i < n - 1; ++i)
      if ((x >> i) & 1U) gens.push_back(i + 1);
    gens.push_back(n);
    int g = 0;
    for (int v : gens) g = std::gcd(g, v);
    if (g != 1) continue;
    const auto in = close(gens, limit);
    const auto p = primitives(in);
    if (!p.empty() && p.back() == n) out.insert(in);
  }
  return out;
}

// Number of semigroups of genus g: every one has Frobenius number at most
// 2g - 1, so scan those classes directly.
inline std::int64_t genus_count(int g) {
  if (g == 0) return 1;
  std::int64_t count = 0;
  for (int f = 1; f <= 2 * g - 1; ++f)
    for (auto t : frobenius_class(f)) {
      int gaps = 0;
      for (int x = 1; x <= f; ++x) gaps += ((t >> x) & 1U) ? 0 : 1;
      if (gaps == g) ++count;
    }
  return count;
}

// μ from the recurrence Σ_{d|n} μ(d) = [n = 1].
inline std::map<int, int> mobius_table(int max_n) {
  std::map<int, int> mu;
  mu[1] = 1;
  for (int n = 2; n <= max_n; ++n) {
    int sum = 0;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) sum += mu[d];
    mu[n] = -sum;
  }
  return mu;
}

// |T_a(m)| by checking every subset of [a+1, a+m] against the definition.
inline std::int64_t t_set_count(int a, int m) {
  std::int64_t count = 0;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << m); ++x) {
    std::set<int> s;
    for (int i = 0; i < m; ++i)
      if ((x >> i) & 1U) s.insert(a + 1 + i);
    std::set<int> padded = s;
    padded.insert(a + m + 1);
    bool found = false;
    for (int v : s) found = found || padded.count(v + 1);
    if (found) ++count;
  }
  return count;
}

}  // namespace nsg::oracle
