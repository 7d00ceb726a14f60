#include "grouptest/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace grouptest {

namespace {

constexpr const char* kHeaderFields[] = {"n", "d", "k", "mode", "value", "source", "elapsed_ms"};

std::string csv_header() {
  std::string out;
  for (const char* field : kHeaderFields) {
    if (!out.empty()) out += ",";
    out += field;
  }
  return out;
}

const char* mode_name(PoolMode mode) {
  return mode == PoolMode::fixed_k ? "fixed" : "unrestricted";
}

std::vector<std::string> record_fields(const CacheRecord& r) {
  return {std::to_string(r.n),  std::to_string(r.d), std::to_string(r.k), mode_name(r.mode),
          r.value.str(),        r.source,            std::to_string(r.elapsed_ms)};
}

std::string join(const std::vector<std::string>& fields, const char* sep) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += sep;
    out += f;
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

int parse_int(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CacheParseError(where + ": expected an integer, got '" + text + "'");
  }
}

}  // namespace

TableFormat parse_table_format(const std::string& name) {
  if (name == "plain") return TableFormat::plain;
  if (name == "csv") return TableFormat::csv;
  if (name == "latex") return TableFormat::latex;
  throw std::invalid_argument("unknown table format '" + name + "' (plain|csv|latex)");
}

std::string render_table(std::span<const CacheRecord> rows, TableFormat format) {
  std::string out;
  switch (format) {
    case TableFormat::csv: {
      out = csv_header() + "\n";
      for (const auto& r : rows) out += join(record_fields(r), ",") + "\n";
      break;
    }
    case TableFormat::plain: {
      std::vector<std::string> header(std::begin(kHeaderFields), std::end(kHeaderFields));
      out = join(header, " ") + "\n";
      for (const auto& r : rows) out += join(record_fields(r), " ") + "\n";
      break;
    }
    case TableFormat::latex: {
      out = "n & d & k & mode & value & source & elapsed\\_ms \\\\\n";
      for (const auto& r : rows) {
        auto fields = record_fields(r);
        if (r.value.is_infinite()) fields[4] = "$\\infty$";
        out += join(fields, " & ") + " \\\\\n";
      }
      break;
    }
  }
  return out;
}

std::vector<CacheRecord> read_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheParseError(path.string() + ": cannot open for reading");
  std::vector<CacheRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (line_no == 1) {
      if (line != csv_header()) {
        throw CacheParseError(where + ": expected header '" + csv_header() + "'");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 7) {
      throw CacheParseError(where + ": expected 7 fields, got " + std::to_string(fields.size()));
    }
    CacheRecord r;
    r.n = parse_int(fields[0], where);
    r.d = parse_int(fields[1], where);
    r.k = parse_int(fields[2], where);
    if (fields[3] == "fixed") {
      r.mode = PoolMode::fixed_k;
    } else if (fields[3] == "unrestricted") {
      r.mode = PoolMode::unrestricted;
    } else {
      throw CacheParseError(where + ": unknown mode '" + fields[3] + "'");
    }
    if (fields[4] == "inf") {
      r.value = Value::infinite();
    } else {
      r.value = Value::finite(static_cast<std::uint64_t>(parse_int(fields[4], where)));
    }
    r.source = fields[5];
    r.elapsed_ms = static_cast<std::uint64_t>(parse_int(fields[6], where));
    records.push_back(std::move(r));
  }
  // (n, d, k, mode) is a unique key within a file; conflicting duplicates
  // mean corrupted or foreign data.
  return merge_records(records, {});
}

void write_cache(const std::filesystem::path& path, std::span<const CacheRecord> records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << render_table(records, TableFormat::csv);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

std::vector<CacheRecord> merge_records(std::span<const CacheRecord> base,
                                       std::span<const CacheRecord> extra) {
  std::map<std::tuple<int, int, int, int>, CacheRecord> merged;
  std::vector<std::tuple<int, int, int, int>> order;
  auto add = [&](const CacheRecord& r) {
    const auto [it, inserted] = merged.try_emplace(r.key(), r);
    if (inserted) {
      order.push_back(r.key());
      return;
    }
    if (it->second.value != r.value) {
      throw CacheConflictError("conflicting cached values for (n=" + std::to_string(r.n) +
                               ", d=" + std::to_string(r.d) + ", k=" + std::to_string(r.k) +
                               ", " + mode_name(r.mode) + "): " + it->second.value.str() +
                               " vs " + r.value.str());
    }
  };
  for (const auto& r : base) add(r);
  for (const auto& r : extra) add(r);
  std::vector<CacheRecord> out;
  out.reserve(order.size());
  for (const auto& key : order) out.push_back(merged.at(key));
  return out;
}

}  // namespace grouptest
