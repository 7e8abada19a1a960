#include "nsg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "nsg/bounds.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/error.hpp"
#include "nsg/sequence_table.hpp"
#include "nsg/transforms.hpp"
#include "nsg/wilf.hpp"

namespace nsg::cli {

namespace {

struct GlobalOptions {
  std::optional<int> max_n;
  std::optional<std::uint64_t> node_cap;
  std::optional<long long> time_cap_secs;
  unsigned threads = 1;

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.budget = EnumerationBudget::from_environment();
    if (max_n) o.budget.max_n = *max_n;
    if (node_cap) o.budget.node_cap = *node_cap;
    if (time_cap_secs) o.budget.time_cap = std::chrono::seconds(*time_cap_secs);
    o.threads = std::max(1U, threads);
    return o;
  }
};

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g",
                static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
  return buf;
}

std::string exact_and_decimal(const Rational& r) {
  std::ostringstream out;
  out << r.numerator() << "/" << r.denominator() << " (" << decimal(r) << ")";
  return out.str();
}

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

nlohmann::ordered_json output_record(const NumericalSemigroup& s) {
  const auto wilf = wilf_check(s);
  nlohmann::ordered_json rec;
  rec["generators"] = s.primitives();
  rec["frobenius"] = s.frobenius();
  rec["genus"] = s.genus();
  rec["multiplicity"] = s.multiplicity();
  rec["embedding_dim"] = s.embedding_dimension();
  rec["depth"] = depth_or_zero(s);
  rec["pdepth"] = static_cast<int>(ceil_div(s.max_primitive(), s.multiplicity()));
  rec["left_count"] = s.left_count();
  rec["wilf_e"] = wilf.e;
  rec["wilf_l"] = wilf.l;
  rec["wilf_f_plus_1"] = wilf.f_plus_1;
  rec["wilf_holds"] = wilf.wilf_holds;
  rec["mebd"] = wilf.mebd;
  rec["crit_sqrt3m"] = wilf.crit_sqrt3m;
  return rec;
}

constexpr const char* kCsvRecordHeader =
    "generators,frobenius,genus,multiplicity,embedding_dim,depth,pdepth,left_count,"
    "wilf_e,wilf_l,wilf_f_plus_1,wilf_holds,mebd,crit_sqrt3m";

std::string csv_record(const nlohmann::ordered_json& rec) {
  std::ostringstream out;
  out << join(rec["generators"].get<std::vector<int>>(), " ");
  for (const char* key : {"frobenius", "genus", "multiplicity", "embedding_dim", "depth", "pdepth", "left_count",
                          "wilf_e", "wilf_l", "wilf_f_plus_1"}) {
    out << ',' << rec[key].get<int>();
  }
  for (const char* key : {"wilf_holds", "mebd", "crit_sqrt3m"}) out << ',' << (rec[key].get<bool>() ? "true" : "false");
  return out.str();
}

// Visits the requested family in canonical order.
std::int64_t visit_family(const std::string& by, int n, const SemigroupVisitor& visit, const EnumerationOptions& o) {
  if (by == "frobenius") return enumerate_by_frobenius(n, visit, o);
  if (by == "maxprim") return enumerate_by_max_primitive(n, visit, o);
  return enumerate_by_genus(n, visit, o);
}

int summary(std::ostream& out, const std::string& identity, int max, int passed, int failed) {
  nlohmann::ordered_json s;
  s["identity"] = identity;
  s["max"] = max;
  s["passed"] = passed;
  s["failed"] = failed;
  out << "summary " << s.dump() << "\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_count(const std::string& by, int n, const GlobalOptions& g, std::ostream& out) {
  const auto o = g.enumeration();
  std::int64_t count = 0;
  if (by == "frobenius") count = census_by_frobenius(n, o).total;
  else if (by == "maxprim") count = count_by_max_primitive(n, o);
  else count = enumerate_by_genus(n, nullptr, o);
  out << count << "\n";
  return kOk;
}

int cmd_list(const std::string& by, int n, const std::string& format, std::int64_t limit, const GlobalOptions& g,
             std::ostream& out) {
  const auto o = g.enumeration();
  // Count first so an oversized request fails before printing anything.
  std::int64_t total = 0;
  if (by == "frobenius") total = census_by_frobenius(n, o).total;
  else if (by == "maxprim") total = count_by_max_primitive(n, o);
  else total = enumerate_by_genus(n, nullptr, o);
  if (total > limit) {
    throw Error(ErrorCode::ListTooLarge,
                std::to_string(total) + " semigroups exceed the list cap of " + std::to_string(limit));
  }
  if (format == "csv") out << kCsvRecordHeader << "\n";
  visit_family(by, n, [&](const NumericalSemigroup& s) {
    if (format == "gens") {
      out << join(s.primitives(), " ") << "\n";
      return;
    }
    const auto rec = output_record(s);
    if (format == "csv") out << csv_record(rec) << "\n";
    else out << rec.dump() << "\n";
  }, o);
  return kOk;
}

int verify_mobius(bool forward, int max, const GlobalOptions& g, std::ostream& out) {
  const auto table = enumerate_sequence_table(max, g.enumeration());
  const auto a = table.a_values();
  const auto n_values = table.n_values();
  int passed = 0, failed = 0;
  for (int n = 1; n <= max; ++n) {
    const auto expected = forward ? n_values.at(n) : a.at(n);
    const auto derived = forward ? n_from_a(n, a) : a_from_n(n, n_values);
    const bool ok = expected == derived;
    (ok ? passed : failed)++;
    out << "n=" << n << (forward ? " N_n=" : " A_n=") << expected << " derived=" << derived
        << (ok ? " PASS" : " FAIL") << "\n";
  }
  return summary(out, forward ? "mobius-forward" : "mobius-inverse", max, passed, failed);
}

int verify_partition(int max, const GlobalOptions& g, std::ostream& out) {
  const auto o = g.enumeration();
  const auto table = enumerate_sequence_table(max, o);
  const auto a = table.a_values();
  int passed = 0, failed = 0;
  for (int f = 1; f <= max; ++f) {
    const auto census = census_by_frobenius(f, o);
    std::int64_t sum = 0;
    bool ok = true;
    for (const auto& [d, size] : census.by_divisor) {
      sum += size;
      ok = ok && size == a.at(f / d);
    }
    ok = ok && sum == census.total;
    (ok ? passed : failed)++;
    out << "f=" << f << " N_f=" << census.total << " sum_d=" << sum << (ok ? " PASS" : " FAIL") << "\n";
  }
  return summary(out, "partition", max, passed, failed);
}

int verify_phi(int max, const GlobalOptions& g, std::ostream& out) {
  const auto o = g.enumeration();
  int passed = 0, failed = 0;
  for (int n = 1; n <= max; ++n) {
    std::set<CanonicalKey> image;
    bool injective = true, depths = true;
    std::int64_t a_n = enumerate_by_max_primitive(n, [&](const NumericalSemigroup& s) {
      const auto t = phi(s);
      injective = image.insert(t.canonical_key()).second && injective;
      const int pdepth = static_cast<int>(ceil_div(s.max_primitive(), s.multiplicity()));
      depths = depths && (n < 3 || pdepth == depth_pair(t).depth);
    }, o);
    std::set<CanonicalKey> gcd_one;
    enumerate_by_frobenius(n, [&](const NumericalSemigroup& t) {
      if (t.extended_left_gcd() == 1) gcd_one.insert(t.canonical_key());
    }, o);
    const bool same_image = image == gcd_one;
    const bool ordinary_missing = n < 2 || !image.contains(NumericalSemigroup::ordinary(n + 1).canonical_key());
    const bool ok = injective && same_image && ordinary_missing && depths;
    (ok ? passed : failed)++;
    out << "n=" << n << " A_n=" << a_n << " injective=" << injective << " image=" << same_image
        << " ordinary_excluded=" << ordinary_missing << " depth=" << depths << (ok ? " PASS" : " FAIL") << "\n";
  }
  return summary(out, "phi", max, passed, failed);
}

int verify_bounds(int max, const GlobalOptions& g, std::ostream& out) {
  const auto table = enumerate_sequence_table(max, g.enumeration());
  const auto a = table.a_values();
  const auto nv = table.n_values();
  int passed = 0, failed = 0;
  auto record = [&](const BoundCheckResult& r) {
    (r.holds ? passed : failed)++;
    out << r.to_string() << "\n";
  };
  for (int n = 1; n <= max; ++n) {
    if (n >= 2) record(check_backelin(n, nv.at(n)));
    if (n >= 3) record(check_fibonacci_lower(n, a.at(n)));
    if (n >= 8) record(check_bertrand_lower(n, a.at(n)));
    record(check_divisor_bound(n));
    if (n >= 2)
      for (const auto& r : check_nfd_upper(n, a, nv)) record(r);
  }
  return summary(out, "bounds", max, passed, failed);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int verify_prime(int max, const GlobalOptions& g, std::ostream& out) {
  const auto table = enumerate_sequence_table(max, g.enumeration());
  const auto a = table.a_values();
  const auto nv = table.n_values();
  int passed = 0, failed = 0;
  for (int n = 2; n <= max; ++n) {
    if (is_prime(n)) {
      const bool ok = a.at(n) == nv.at(n) - 1;
      (ok ? passed : failed)++;
      out << "p=" << n << " A_p=" << a.at(n) << " N_p-1=" << nv.at(n) - 1 << (ok ? " PASS" : " FAIL") << "\n";
      continue;
    }
    // Prime powers p^s with s >= 2: A_{p^s} = N_{p^s} - N_{p^(s-1)}.
    int p = 2;
    while (n % p != 0) ++p;
    int rest = n;
    while (rest % p == 0) rest /= p;
    if (rest != 1 || n <= 2) continue;
    const bool ok = a.at(n) == nv.at(n) - nv.at(n / p);
    (ok ? passed : failed)++;
    out << "q=" << n << " A_q=" << a.at(n) << " N_q-N_(q/p)=" << nv.at(n) - nv.at(n / p) << (ok ? " PASS" : " FAIL")
        << "\n";
  }
  return summary(out, "prime", max, passed, failed);
}

int cmd_table(int max, const std::string& format, const std::string& cache_path, const GlobalOptions& g,
              std::ostream& out, std::ostream& err) {
  const auto o = g.enumeration();
  bool corrupted = false;
  SequenceTable stored;
  if (!cache_path.empty()) {
    try {
      if (auto loaded = load_cache(cache_path)) stored = std::move(*loaded);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CacheCorrupt) throw;
      err << "warning: ignoring corrupt cache " << cache_path << ": " << e.what() << "\n";
      corrupted = true;
    }
  }

  SequenceTable emitted;
  bool dirty = corrupted;
  for (int n = 1; n <= max; ++n) {
    const auto* row = stored.find(n);
    if (row && row->a && row->count) {
      auto copy = *row;
      copy.provenance_a = copy.provenance_n = Provenance::Cached;
      emitted.upsert(copy);
      continue;
    }
    const auto census = census_by_frobenius(n, o);
    SequenceRow fresh{.n = n, .a = census.by_divisor.at(1), .count = census.total};
    stored.upsert(fresh);
    emitted.upsert(fresh);
    dirty = true;
  }
  if (!cache_path.empty() && dirty) save_cache_atomic(cache_path, stored);

  const auto problems = emitted.validate();
  for (const auto& p : problems) err << "inconsistent table: " << p << "\n";
  out << (format == "json" ? to_json(emitted) : to_csv(emitted));
  if (!problems.empty()) return kVerificationFailed;
  return corrupted ? kCacheCorrupt : kOk;
}

int cmd_wilf_scan(const std::string& by, int max, const GlobalOptions& g, std::ostream& out) {
  const auto family = by == "frobenius" ? ScanFamily::Frobenius : ScanFamily::MaxPrimitive;
  const auto result = wilf_scan(family, max, g.enumeration());
  out << "checked " << result.checked << " semigroups (" << by << " <= " << max << ")\n";
  out << "criterion exceptions " << result.criterion_exceptions << "\n";
  if (result.violation) {
    out << "violation " << *result.violation_generators << " key " << result.violation->to_string() << "\n";
    return kVerificationFailed;
  }
  out << "no violation\n";
  return result.criterion_exceptions == 0 ? kOk : kVerificationFailed;
}

int cmd_wilf_stats(int n, int half_width, const GlobalOptions& g, std::ostream& out) {
  const auto o = g.enumeration();
  const auto stat = multiplicity_distribution(n, half_width, o);
  out << "n,half_width,inside_count,outside_count,fraction_outside\n";
  out << stat.n << ',' << stat.half_width << ',' << stat.inside_count << ',' << stat.outside_count << ','
      << exact_and_decimal(stat.fraction_outside) << "\n";
  if (stat.inside_count + stat.outside_count == 0) return kOk;
  out << "left_primitive_fraction " << exact_and_decimal(left_primitive_fraction(n, o)) << "\n";
  out << "wilf_probability " << exact_and_decimal(wilf_probability(n, o)) << "\n";
  return kOk;
}

int cmd_family9(int m, const std::vector<int>& b, std::ostream& out) {
  const auto w = construct_family9(m, b.empty() ? std::nullopt : std::optional<std::vector<int>>(b));
  out << "m " << w.m << "\n";
  out << "generators " << join(w.semigroup.primitives(), " ") << "\n";
  out << "frobenius " << w.semigroup.frobenius() << "\n";
  out << "interval_frobenius " << w.interval_frobenius << " formula " << w.interval_frobenius_formula << "\n";
  out << "criterion_sqrt3m " << (w.criterion ? "true" : "false") << "\n";
  out << "frobenius_above_3m " << (w.frobenius_above_3m ? "true" : "false") << "\n";
  out << "few_primitives " << (w.few_primitives ? "true" : "false") << "\n";
  out << "wilf_holds " << (w.wilf_holds ? "true" : "false") << "\n";
  out << "verification " << (w.verified() ? "PASS" : "FAIL") << "\n";
  return w.verified() ? kOk : kVerificationFailed;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ListTooLarge: return kBudgetExceeded;
    case ErrorCode::VerificationFailed: return kVerificationFailed;
    case ErrorCode::CacheCorrupt: return kCacheCorrupt;
    default: return kUsageError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, count and verify numerical semigroups by Frobenius number and maximum primitive", "nsg"};
  app.require_subcommand(1);

  GlobalOptions global;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-n", global.max_n, "Largest n any enumeration may reach (default 45)");
    cmd->add_option("--node-cap", global.node_cap, "Abort after this many search nodes");
    cmd->add_option("--time-cap-secs", global.time_cap_secs, "Abort after this many seconds (default 600)");
    cmd->add_option("--threads", global.threads, "Worker threads for enumeration")->check(CLI::Range(1U, 256U));
  };
  const std::vector<std::string> families{"frobenius", "maxprim", "genus"};

  std::string by = "frobenius";
  int n = 1;
  auto* count = app.add_subcommand("count", "Print the number of semigroups in a family");
  count->add_option("--by", by)->check(CLI::IsMember(families));
  count->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  add_budget(count);

  std::string list_format = "json";
  std::int64_t list_cap = 100000;
  auto* list = app.add_subcommand("list", "List the semigroups of a family in canonical order");
  list->add_option("--by", by)->check(CLI::IsMember(families));
  list->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  list->add_option("--format", list_format)->check(CLI::IsMember({"json", "csv", "gens"}));
  list->add_option("--limit", list_cap, "Refuse to list more than this many semigroups");
  add_budget(list);

  std::string identity;
  int max = 20;
  auto* verify = app.add_subcommand("verify", "Check an identity or bound family for every n <= --max");
  verify->add_option("identity", identity)
      ->required()
      ->check(CLI::IsMember({"mobius-forward", "mobius-inverse", "partition", "phi", "bounds", "prime"}));
  verify->add_option("--max", max)->check(CLI::PositiveNumber);
  add_budget(verify);

  std::string table_format = "csv";
  std::string cache_path;
  auto* table = app.add_subcommand("table", "Emit (n, A_n, N_n) rows, optionally through a cache file");
  table->add_option("--max", max)->check(CLI::PositiveNumber);
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--cache", cache_path);
  add_budget(table);

  auto* wilf = app.add_subcommand("wilf", "Wilf inequality scans and statistics");
  wilf->require_subcommand(1);
  std::string scan_by = "maxprim";
  auto* scan = wilf->add_subcommand("scan", "Check Wilf's inequality on every semigroup up to --max");
  scan->add_option("--by", scan_by)->check(CLI::IsMember({"frobenius", "maxprim"}));
  scan->add_option("--max", max)->check(CLI::PositiveNumber);
  add_budget(scan);
  int half_width = 0;
  auto* stats = wilf->add_subcommand("stats", "Multiplicity distribution and criterion fractions for A_n");
  stats->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  stats->add_option("--half-width", half_width)->check(CLI::NonNegativeNumber);
  add_budget(stats);

  auto* construct = app.add_subcommand("construct", "Build witness semigroups");
  construct->require_subcommand(1);
  int m = 31;
  std::vector<int> b;
  auto* family9 = construct->add_subcommand("family9", "Interval-family witness <B> for multiplicity m");
  family9->add_option("--m", m)->required();
  family9->add_option("--b", b, "Explicit B (defaults to the run [m, m + ceil(sqrt(3m))])")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*count) return cmd_count(by, n, global, out);
    if (*list) return cmd_list(by, n, list_format, list_cap, global, out);
    if (*verify) {
      if (identity == "mobius-forward") return verify_mobius(true, max, global, out);
      if (identity == "mobius-inverse") return verify_mobius(false, max, global, out);
      if (identity == "partition") return verify_partition(max, global, out);
      if (identity == "phi") return verify_phi(max, global, out);
      if (identity == "bounds") return verify_bounds(max, global, out);
      return verify_prime(max, global, out);
    }
    if (*table) return cmd_table(max, table_format, cache_path, global, out, err);
    if (*scan) return cmd_wilf_scan(scan_by, max, global, out);
    if (*stats) return cmd_wilf_stats(n, half_width, global, out);
    if (*family9) return cmd_family9(m, b, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace nsg::cli
