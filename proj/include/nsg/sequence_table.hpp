#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/enumerate.hpp"
#include "nsg/transforms.hpp"

namespace nsg {

enum class Provenance { Enumerated, IdentityDerived, Cached };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view text);

struct SequenceRow {
  int n = 0;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> count;  // N_n
  Provenance provenance_a = Provenance::Enumerated;
  Provenance provenance_n = Provenance::Enumerated;

  bool operator==(const SequenceRow&) const = default;
};

/// Rows (n, A_n, N_n) with the origin of each value. Rows are kept sorted by n.
class SequenceTable {
 public:
  static constexpr int kFormatVersion = 1;

  const std::vector<SequenceRow>& rows() const noexcept { return rows_; }
  int format_version() const noexcept { return kFormatVersion; }

  void upsert(SequenceRow row);
  const SequenceRow* find(int n) const;
  int max_n() const noexcept { return rows_.empty() ? 0 : rows_.back().n; }

  /// Values restricted to one provenance (or any, when nullopt).
  CountTable a_values(std::optional<Provenance> only = std::nullopt) const;
  CountTable n_values(std::optional<Provenance> only = std::nullopt) const;

  /// Empty when consistent; otherwise one message per broken invariant:
  /// A_n < N_n on enumerated rows with n >= 2, identity-derived values agreeing with
  /// enumerated ones.
  std::vector<std::string> validate() const;

  /// Same rows with every provenance replaced.
  SequenceTable relabelled(Provenance p) const;

  bool operator==(const SequenceTable&) const = default;

 private:
  std::vector<SequenceRow> rows_;
};

/// Enumerates (A_n, N_n) for 1 ≤ n ≤ max_n. A_n is the size of the gcd-1
/// class of N_n; no identity is used to fill values.
SequenceTable enumerate_sequence_table(int max_n, const EnumerationOptions& options = {});

/// One row derived from identities: N_n from the A column of `source` (when
/// possible) and A_n from its N column.
SequenceRow identity_row(int n, const SequenceTable& source);

std::string to_csv(const SequenceTable& table);
std::string to_json(const SequenceTable& table);

/// Line-oriented cache text: a header line, then
/// `n \t A_n \t N_n \t provenance \t crc32` per row.
std::string serialize_cache(const SequenceTable& table);

/// Throws CacheCorrupt on any malformed line or checksum mismatch. Rows come
/// back with the provenance stored in the file.
SequenceTable parse_cache(std::string_view text);

std::optional<SequenceTable> load_cache(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`.
void save_cache_atomic(const std::filesystem::path& path, const SequenceTable& table);

}  // namespace nsg
