#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "grouptest/instance.hpp"
#include "grouptest/value.hpp"

namespace grouptest {

/// One persisted result line. (n, d, k, mode) is the unique key.
struct CacheRecord {
  int n = 0;
  int d = 0;
  int k = 0;  // 0 in unrestricted mode
  PoolMode mode = PoolMode::fixed_k;
  Value value = Value::finite(0);
  std::string source = "solver";  // solver | formula | strategy
  std::uint64_t elapsed_ms = 0;

  [[nodiscard]] std::tuple<int, int, int, int> key() const {
    return {n, d, k, mode == PoolMode::fixed_k ? 0 : 1};
  }

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

enum class TableFormat { plain, csv, latex };

/// Throws std::invalid_argument on anything but plain|csv|latex.
[[nodiscard]] TableFormat parse_table_format(const std::string& name);

/// Deterministic, byte-exact rendering. csv: comma separated with the header
/// row "n,d,k,mode,value,source,elapsed_ms". latex: tabular body rows joined
/// by " & " with "\\" line endings, infinity as "$\infty$". plain: the same
/// columns space separated. Infinite values render as "inf" outside latex.
[[nodiscard]] std::string render_table(std::span<const CacheRecord> rows, TableFormat format);

class CacheParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two records with one key but different values: the solver is deterministic,
/// so this can only mean corrupted or foreign data.
class CacheConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a cache file. Malformed lines raise CacheParseError naming the line.
[[nodiscard]] std::vector<CacheRecord> read_cache(const std::filesystem::path& path);

/// Writes header plus one line per record.
void write_cache(const std::filesystem::path& path, std::span<const CacheRecord> records);

/// Key-unique union of both lists. Equal values under one key collapse to the
/// earlier record; conflicting values raise CacheConflictError.
[[nodiscard]] std::vector<CacheRecord> merge_records(std::span<const CacheRecord> base,
                                                     std::span<const CacheRecord> extra);

}  // namespace grouptest
