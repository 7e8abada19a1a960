#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <unistd.h>
#include <zlib.h>

#include <cstdio>

#include "nsg/error.hpp"
#include "nsg/sequence_table.hpp"
#include "table1.hpp"

using namespace nsg;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an nsg::Error");
  return ErrorCode::DomainError;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("nsg_table_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("enumerated table matches the published rows") {
  const auto t = enumerate_sequence_table(26);
  REQUIRE(t.rows().size() == 26);
  for (const auto& r : t.rows()) {
    CHECK(r.a == test::published(r.n).a);
    CHECK(r.count == test::published(r.n).count);
    CHECK(r.provenance_a == Provenance::Enumerated);
  }
  CHECK(t.validate().empty());
  CHECK(t.max_n() == 26);
}

TEST_CASE("identity-derived rows") {
  const auto t = enumerate_sequence_table(20);
  for (int n = 1; n <= 20; ++n) {
    const auto row = identity_row(n, t);
    CHECK(row.count == t.find(n)->count);
    CHECK(row.a == t.find(n)->a);
    CHECK(row.provenance_a == Provenance::IdentityDerived);
  }
  // Missing inputs leave the value absent instead of guessing.
  SequenceTable sparse;
  sparse.upsert({.n = 12, .a = 35, .count = 40});
  const auto row = identity_row(12, sparse);
  CHECK_FALSE(row.count);
  CHECK_FALSE(row.a);
}

TEST_CASE("validation catches inconsistent rows") {
  SequenceTable t = enumerate_sequence_table(8);
  t.upsert({.n = 5, .a = 5, .count = 5});
  auto problems = t.validate();
  REQUIRE(problems.size() == 1);
  CHECK(problems.front().find("row 5") != std::string::npos);

  SequenceTable derived = enumerate_sequence_table(8);
  auto wrong = *derived.find(6);
  wrong.a = 3;
  wrong.provenance_a = Provenance::IdentityDerived;
  derived.upsert(wrong);
  // The derived A_6 has no enumerated counterpart left, so nothing confirms or refutes it.
  CHECK(derived.validate().empty());
  CHECK(derived.a_values(Provenance::IdentityDerived) == CountTable{{6, 3}});
  CHECK(derived.a_values(Provenance::Enumerated).count(6) == 0);
}

TEST_CASE("CSV and JSON emitters") {
  auto t = enumerate_sequence_table(2);
  CHECK(to_csv(t) ==
        "# format_version=1\n"
        "n,A_n,N_n,provenance_A,provenance_N\n"
        "1,1,1,enumerated,enumerated\n"
        "2,0,1,enumerated,enumerated\n");
  t.upsert({.n = 3, .a = std::nullopt, .count = 2});
  CHECK(to_csv(t).find("3,,2,,enumerated\n") != std::string::npos);

  const auto doc = nlohmann::json::parse(to_json(t));
  CHECK(doc["format_version"] == 1);
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][1]["A_n"] == 0);
  CHECK(doc["rows"][2]["A_n"].is_null());
  CHECK(doc["rows"][2]["provenance_N"] == "enumerated");
}

TEST_CASE("cache round trip") {
  auto t = enumerate_sequence_table(12);
  t.upsert(identity_row(13, t));
  const auto text = serialize_cache(t);
  CHECK(text.rfind("# nsg sequence cache v1\n", 0) == 0);
  CHECK(parse_cache(text) == t);

  const auto path = scratch("cache.tsv");
  save_cache_atomic(path, t);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  const auto loaded = load_cache(path);
  REQUIRE(loaded);
  CHECK(*loaded == t);
  CHECK_FALSE(load_cache(scratch("missing.tsv")));
  std::filesystem::remove_all(path.parent_path());
}

TEST_CASE("corrupt caches are rejected") {
  const auto text = serialize_cache(enumerate_sequence_table(5));
  auto flip = text;
  flip[flip.find("\t5\t") + 1] = '6';  // N_5 edited without fixing the checksum
  CHECK(code_of([&] { parse_cache(flip); }) == ErrorCode::CacheCorrupt);
  CHECK(code_of([] { parse_cache("not a cache\n"); }) == ErrorCode::CacheCorrupt);
  CHECK(code_of([] { parse_cache(""); }) == ErrorCode::CacheCorrupt);
  CHECK(code_of([&] { parse_cache(text + "garbage\n"); }) == ErrorCode::CacheCorrupt);

  // Duplicate rows and unknown provenance values, each with a valid checksum.
  auto lines = text.substr(text.find('\n') + 1);
  auto first = lines.substr(0, lines.find('\n') + 1);
  CHECK(code_of([&] { parse_cache(text + first); }) == ErrorCode::CacheCorrupt);

  auto signed_line = [](const std::string& body) {
    const auto crc = crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(body.data()),
                           static_cast<uInt>(body.size()));
    char hex[9];
    std::snprintf(hex, sizeof hex, "%08lx", static_cast<unsigned long>(crc));
    return "# nsg sequence cache v1\n" + body + "\t" + hex + "\n";
  };
  CHECK(parse_cache(signed_line("1\t1\t1\tenumerated")).rows().size() == 1);
  CHECK(code_of([&] { parse_cache(signed_line("1\t1\t1\tguessed")); }) == ErrorCode::CacheCorrupt);
  CHECK(code_of([&] { parse_cache(signed_line("0\t1\t1\tenumerated")); }) == ErrorCode::CacheCorrupt);
  CHECK(code_of([&] { parse_cache(signed_line("1\tx\t1\tenumerated")); }) == ErrorCode::CacheCorrupt);
}

TEST_CASE("mixed provenance survives the cache") {
  SequenceTable t;
  t.upsert({.n = 4, .a = 1, .count = 2, .provenance_a = Provenance::IdentityDerived,
            .provenance_n = Provenance::Enumerated});
  const auto text = serialize_cache(t);
  CHECK(text.find("identity-derived+enumerated") != std::string::npos);
  CHECK(parse_cache(text) == t);
  CHECK(t.relabelled(Provenance::Cached).rows().front().provenance_a == Provenance::Cached);
}

TEST_CASE("provenance names") {
  for (auto p : {Provenance::Enumerated, Provenance::IdentityDerived, Provenance::Cached})
    CHECK(provenance_from_string(to_string(p)) == p);
  CHECK(code_of([] { provenance_from_string("other"); }) == ErrorCode::DomainError);
}
