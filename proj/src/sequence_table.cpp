#include "nsg/sequence_table.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "nsg/error.hpp"

namespace nsg {

namespace {

constexpr std::string_view kCacheHeader = "# nsg sequence cache v1";

std::string optional_field(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

std::uint32_t crc_of(std::string_view text) {
  auto crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(text.data()), static_cast<uInt>(text.size()));
  return static_cast<std::uint32_t>(crc);
}

std::string hex8(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class Int>
std::optional<Int> parse_int(std::string_view text) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

[[noreturn]] void corrupt(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::CacheCorrupt, "line " + std::to_string(line) + ": " + why);
}

std::string provenance_field(const SequenceRow& row) {
  if (row.provenance_a == row.provenance_n) return std::string(to_string(row.provenance_a));
  return std::string(to_string(row.provenance_a)) + "+" + std::string(to_string(row.provenance_n));
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Enumerated: return "enumerated";
    case Provenance::IdentityDerived: return "identity-derived";
    case Provenance::Cached: return "cached";
  }
  return "?";
}

Provenance provenance_from_string(std::string_view text) {
  if (text == "enumerated") return Provenance::Enumerated;
  if (text == "identity-derived") return Provenance::IdentityDerived;
  if (text == "cached") return Provenance::Cached;
  throw Error(ErrorCode::DomainError, "unknown provenance '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// SequenceTable

void SequenceTable::upsert(SequenceRow row) {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row.n,
                             [](const SequenceRow& r, int n) { return r.n < n; });
  if (it != rows_.end() && it->n == row.n) *it = row;
  else rows_.insert(it, row);
}

const SequenceRow* SequenceTable::find(int n) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), n,
                             [](const SequenceRow& r, int key) { return r.n < key; });
  return it != rows_.end() && it->n == n ? &*it : nullptr;
}

CountTable SequenceTable::a_values(std::optional<Provenance> only) const {
  CountTable out;
  for (const auto& r : rows_)
    if (r.a && (!only || r.provenance_a == *only)) out[r.n] = *r.a;
  return out;
}

CountTable SequenceTable::n_values(std::optional<Provenance> only) const {
  CountTable out;
  for (const auto& r : rows_)
    if (r.count && (!only || r.provenance_n == *only)) out[r.n] = *r.count;
  return out;
}

std::vector<std::string> SequenceTable::validate() const {
  std::vector<std::string> problems;
  for (const auto& r : rows_) {
    // A_1 = N_1 = 1 (the naturals versus O_2), so the strict order starts at n = 2.
    if (r.n >= 2 && r.a && r.count && r.provenance_a == Provenance::Enumerated &&
        r.provenance_n == Provenance::Enumerated && !(*r.a < *r.count)) {
      problems.push_back("row " + std::to_string(r.n) + ": A_n < N_n fails");
    }
  }
  // Identity-derived values are checked against an enumerated table built
  // from the same rows, so a derived value can never confirm itself.
  SequenceTable enumerated;
  for (const auto& r : rows_) {
    SequenceRow e{.n = r.n};
    if (r.provenance_a != Provenance::IdentityDerived) e.a = r.a;
    if (r.provenance_n != Provenance::IdentityDerived) e.count = r.count;
    enumerated.upsert(e);
  }
  for (const auto& r : rows_) {
    if (r.a && r.provenance_a == Provenance::IdentityDerived) {
      const auto* e = enumerated.find(r.n);
      if (e && e->a && *e->a != *r.a) problems.push_back("row " + std::to_string(r.n) + ": derived A_n disagrees");
    }
    if (r.count && r.provenance_n == Provenance::IdentityDerived) {
      const auto* e = enumerated.find(r.n);
      if (e && e->count && *e->count != *r.count) {
        problems.push_back("row " + std::to_string(r.n) + ": derived N_n disagrees");
      }
    }
  }
  return problems;
}

SequenceTable SequenceTable::relabelled(Provenance p) const {
  SequenceTable out = *this;
  for (auto& r : out.rows_) r.provenance_a = r.provenance_n = p;
  return out;
}

SequenceTable enumerate_sequence_table(int max_n, const EnumerationOptions& options) {
  SequenceTable table;
  for (int n = 1; n <= max_n; ++n) {
    const auto census = census_by_frobenius(n, options);
    table.upsert({.n = n, .a = census.by_divisor.at(1), .count = census.total,
                  .provenance_a = Provenance::Enumerated, .provenance_n = Provenance::Enumerated});
  }
  return table;
}

SequenceRow identity_row(int n, const SequenceTable& source) {
  SequenceRow row{.n = n, .a = std::nullopt, .count = std::nullopt,
                  .provenance_a = Provenance::IdentityDerived, .provenance_n = Provenance::IdentityDerived};
  try {
    row.count = n_from_a(n, source.a_values());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingTableEntry) throw;
  }
  try {
    row.a = a_from_n(n, source.n_values());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingTableEntry) throw;
  }
  return row;
}

// ---------------------------------------------------------------------------
// Emitters

std::string to_csv(const SequenceTable& table) {
  std::ostringstream out;
  out << "# format_version=" << table.format_version() << "\n";
  out << "n,A_n,N_n,provenance_A,provenance_N\n";
  for (const auto& r : table.rows()) {
    out << r.n << ',' << optional_field(r.a) << ',' << optional_field(r.count) << ','
        << (r.a ? to_string(r.provenance_a) : "") << ',' << (r.count ? to_string(r.provenance_n) : "") << "\n";
  }
  return out.str();
}

std::string to_json(const SequenceTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows()) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["A_n"] = r.a ? nlohmann::ordered_json(*r.a) : nlohmann::ordered_json(nullptr);
    row["N_n"] = r.count ? nlohmann::ordered_json(*r.count) : nlohmann::ordered_json(nullptr);
    row["provenance_A"] = r.a ? nlohmann::ordered_json(to_string(r.provenance_a)) : nlohmann::ordered_json(nullptr);
    row["provenance_N"] = r.count ? nlohmann::ordered_json(to_string(r.provenance_n)) : nlohmann::ordered_json(nullptr);
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["format_version"] = table.format_version();
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Cache

std::string serialize_cache(const SequenceTable& table) {
  std::string out(kCacheHeader);
  out += "\n";
  for (const auto& r : table.rows()) {
    const std::string body = std::to_string(r.n) + "\t" + optional_field(r.a) + "\t" + optional_field(r.count) +
                             "\t" + provenance_field(r);
    out += body + "\t" + hex8(crc_of(body)) + "\n";
  }
  return out;
}

SequenceTable parse_cache(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCacheHeader) corrupt(1, "missing or unknown header");

  SequenceTable table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], '\t');
    if (fields.size() != 5) corrupt(i + 1, "expected 5 tab-separated fields");
    const auto body = lines[i].substr(0, lines[i].size() - fields[4].size() - 1);
    if (hex8(crc_of(body)) != fields[4]) corrupt(i + 1, "checksum mismatch");

    auto n = parse_int<int>(fields[0]);
    if (!n || *n < 1) corrupt(i + 1, "bad n");
    SequenceRow row{.n = *n};
    if (!fields[1].empty()) {
      row.a = parse_int<std::int64_t>(fields[1]);
      if (!row.a) corrupt(i + 1, "bad A_n");
    }
    if (!fields[2].empty()) {
      row.count = parse_int<std::int64_t>(fields[2]);
      if (!row.count) corrupt(i + 1, "bad N_n");
    }
    try {
      const auto parts = split(fields[3], '+');
      if (parts.size() > 2) corrupt(i + 1, "bad provenance");
      row.provenance_a = provenance_from_string(parts.front());
      row.provenance_n = provenance_from_string(parts.back());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CacheCorrupt) throw;
      corrupt(i + 1, "bad provenance");
    }
    if (table.find(row.n)) corrupt(i + 1, "duplicate row");
    table.upsert(row);
  }
  return table;
}

std::optional<SequenceTable> load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_cache(text);
}

void save_cache_atomic(const std::filesystem::path& path, const SequenceTable& table) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::CacheCorrupt, "cannot write " + tmp.string());
    out << serialize_cache(table);
    if (!out.flush()) throw Error(ErrorCode::CacheCorrupt, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nsg
