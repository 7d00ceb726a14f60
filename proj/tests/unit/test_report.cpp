#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "grouptest/report.hpp"

using namespace grouptest;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const char* name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

CacheRecord record(int n, int d, int k, PoolMode mode, Value v, const char* source,
                   std::uint64_t ms) {
  return CacheRecord{n, d, k, mode, v, source, ms};
}

}  // namespace

TEST_CASE("csv rendering is byte exact") {
  const CacheRecord r = record(6, 2, 2, PoolMode::fixed_k, Value::finite(5), "solver", 12);
  CHECK(render_table({&r, 1}, TableFormat::csv) ==
        "n,d,k,mode,value,source,elapsed_ms\n6,2,2,fixed,5,solver,12\n");
}

TEST_CASE("plain rendering of an empty row set is the header only") {
  CHECK(render_table({}, TableFormat::plain) == "n d k mode value source elapsed_ms\n");
}

TEST_CASE("latex rendering uses \\\\ line endings and $\\infty$") {
  const CacheRecord r =
      record(3, 2, 2, PoolMode::fixed_k, Value::infinite(), "solver", 1);
  const std::string out = render_table({&r, 1}, TableFormat::latex);
  CHECK(out ==
        "n & d & k & mode & value & source & elapsed\\_ms \\\\\n"
        "3 & 2 & 2 & fixed & $\\infty$ & solver & 1 \\\\\n");
}

TEST_CASE("parse_table_format rejects unknown names") {
  CHECK(parse_table_format("csv") == TableFormat::csv);
  CHECK_THROWS_AS((void)parse_table_format("markdown"), std::invalid_argument);
}

TEST_CASE("cache roundtrip reproduces records exactly") {
  TempFile tmp("grouptest_cache_roundtrip.csv");
  const std::vector<CacheRecord> records = {
      record(6, 1, 4, PoolMode::fixed_k, Value::finite(3), "solver", 12),
      record(3, 2, 2, PoolMode::fixed_k, Value::infinite(), "solver", 0),
      record(6, 2, 0, PoolMode::unrestricted, Value::finite(5), "solver", 40),
  };
  write_cache(tmp.path, records);
  CHECK(read_cache(tmp.path) == records);
}

TEST_CASE("merging keeps one record per key and rejects conflicts") {
  const auto a = record(6, 1, 4, PoolMode::fixed_k, Value::finite(3), "solver", 12);
  const auto same_key = record(6, 1, 4, PoolMode::fixed_k, Value::finite(3), "formula", 1);
  const auto merged = merge_records({&a, 1}, {&same_key, 1});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0] == a);  // the earlier record wins

  const auto conflict = record(6, 1, 4, PoolMode::fixed_k, Value::finite(4), "solver", 9);
  CHECK_THROWS_AS((void)merge_records({&a, 1}, {&conflict, 1}), CacheConflictError);

  // Same (n, d, k) under a different mode is a different key.
  const auto other_mode = record(6, 1, 4, PoolMode::unrestricted, Value::finite(3), "solver", 2);
  CHECK(merge_records({&a, 1}, {&other_mode, 1}).size() == 2);
}

TEST_CASE("malformed cache lines name the offending line") {
  TempFile tmp("grouptest_cache_bad.csv");
  {
    std::ofstream out(tmp.path);
    out << "n,d,k,mode,value,source,elapsed_ms\n";
    out << "6,1,4,fixed,3,solver,12\n";
    out << "6,1,oops,fixed,3,solver,12\n";
  }
  try {
    (void)read_cache(tmp.path);
    FAIL_CHECK("expected a parse error");
  } catch (const CacheParseError& e) {
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }

  TempFile bad_header("grouptest_cache_header.csv");
  {
    std::ofstream out(bad_header.path);
    out << "nope\n";
  }
  CHECK_THROWS_AS((void)read_cache(bad_header.path), CacheParseError);
}
