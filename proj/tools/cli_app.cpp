#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grouptest/grouptest.hpp"

namespace grouptest::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFail = 2;
constexpr int kBudget = 3;

struct CommonArgs {
  int threads = 1;
  std::optional<double> budget_secs{};
};

SolveConfig config_from(const CommonArgs& args) {
  SolveConfig cfg;
  cfg.threads = args.threads;
  cfg.parallel_root = args.threads > 1;
  cfg.budget_secs = args.budget_secs;
  return cfg;
}

std::uint64_t to_ms(double seconds) {
  return static_cast<std::uint64_t>(std::llround(seconds * 1000.0));
}

std::vector<CacheRecord> load_cache_if_present(const std::filesystem::path& path) {
  if (path.empty() || !std::filesystem::exists(path)) return {};
  return read_cache(path);
}

const CacheRecord* find_record(const std::vector<CacheRecord>& records, const Instance& inst) {
  const CacheRecord probe{inst.n, inst.d, inst.is_fixed() ? inst.k : 0, inst.mode,
                          Value::finite(0), "", 0};
  const auto it = std::find_if(records.begin(), records.end(), [&](const CacheRecord& r) {
    return r.key() == probe.key();
  });
  return it == records.end() ? nullptr : &*it;
}

int cmd_solve(const Instance& inst, const CommonArgs& common, const std::string& cache_path,
              std::ostream& out, std::ostream& err) {
  std::vector<CacheRecord> cache = load_cache_if_present(cache_path);
  if (const CacheRecord* hit = find_record(cache, inst)) {
    out << inst.label() << " = " << hit->value.str() << "\n";
    return kOk;
  }
  const SolveResult result = solve(inst, config_from(common));
  if (!result.is_exact()) {
    err << inst.label() << ": budget exceeded; best bracket [" << result.lower_bound.str() << ", "
        << (result.upper_bound ? result.upper_bound->str() : "?") << "]\n";
    return kBudget;
  }
  out << inst.label() << " = " << result.value.str() << "\n";
  if (!cache_path.empty()) {
    const CacheRecord record{inst.n,       inst.d,   inst.is_fixed() ? inst.k : 0,
                             inst.mode,    result.value, "solver",
                             to_ms(result.stats.seconds)};
    write_cache(cache_path, merge_records(cache, {&record, 1}));
  }
  return kOk;
}

int cmd_run(const std::string& name, int n, int d, std::optional<int> k, bool trace,
            std::ostream& out, std::ostream& err) {
  Instance inst{};
  if (name == "halving") {
    inst = Instance::unrestricted(n, d);
  } else {
    if (!k) {
      err << "strategy '" << name << "' needs --k\n";
      return kUsage;
    }
    inst = Instance::fixed(n, d, *k);
  }
  const auto strategy = make_strategy(name, inst);
  const EvaluationReport report = worst_case_tests(*strategy);
  out << "worst_case = " << report.worst_case.str() << ", sound = "
      << (report.sound ? "true" : "false") << "\n";
  if (trace) {
    for (const Step& step : report.worst_trace) {
      out << "test " << step.pool.str() << " -> " << outcome_name(step.outcome) << "\n";
    }
  }
  return kOk;
}

int cmd_table(int d, int k, int n_min, int n_max, const std::string& format_name,
              const std::string& cache_path, const CommonArgs& common, std::ostream& out,
              std::ostream& err) {
  if (n_min > n_max) {
    err << "--n-min must not exceed --n-max\n";
    return kUsage;
  }
  const TableFormat format = parse_table_format(format_name);
  std::vector<CacheRecord> cache = load_cache_if_present(cache_path);
  std::vector<CacheRecord> rows;
  std::vector<CacheRecord> fresh;
  for (int n = n_min; n <= n_max; ++n) {
    const Instance inst = Instance::fixed(n, d, k);
    if (const CacheRecord* hit = find_record(cache, inst)) {
      rows.push_back(*hit);
      continue;
    }
    const SolveResult result = solve(inst, config_from(common));
    if (!result.is_exact()) {
      err << inst.label() << ": budget exceeded; best bracket [" << result.lower_bound.str()
          << ", " << (result.upper_bound ? result.upper_bound->str() : "?") << "]\n";
      return kBudget;
    }
    const CacheRecord record{n,         d,      k, inst.mode, result.value, "solver",
                             to_ms(result.stats.seconds)};
    rows.push_back(record);
    fresh.push_back(record);
  }
  out << render_table(rows, format);
  if (!cache_path.empty() && !fresh.empty()) {
    write_cache(cache_path, merge_records(cache, fresh));
  }
  return kOk;
}

int cmd_verify(bool fast, const CommonArgs& common, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.fast = fast;
  opts.threads = common.threads;
  opts.progress = &err;
  const auto results = run_paper_suite(opts);
  bool all_ok = true;
  for (const auto& r : results) {
    const bool ok = r.ok();
    all_ok = all_ok && ok;
    out << (ok ? "PASS" : "FAIL") << " " << r.id << ": " << r.title;
    if (!r.blocking) out << " [non-blocking]";
    out << "\n";
    if (!r.detail.empty() && (!ok || !r.blocking)) out << "    " << r.detail << "\n";
  }
  out << (all_ok ? "suite passed" : "suite FAILED") << "\n";
  return all_ok ? kOk : kVerifyFail;
}

int cmd_conjecture(int d, int n_max, const CommonArgs& common, std::ostream& out,
                   std::ostream& err) {
  if (d < 3) {
    err << "--d must be at least 3\n";
    return kUsage;
  }
  bool budget_hit = false;
  SolveConfig cfg = config_from(common);
  if (!cfg.budget_secs) cfg.budget_secs = 600.0;
  for (int n = 2 * (d + 1); n <= n_max; ++n) {
    const Instance inst = Instance::fixed(n, d, 2);
    const Value want = *conjecture1_value(n, d).value;
    const SolveResult result = solve(inst, cfg);
    if (!result.is_exact()) {
      out << inst.label() << ": unresolved within budget (bracket [" << result.lower_bound.str()
          << ", " << (result.upper_bound ? result.upper_bound->str() : "?") << "])\n";
      budget_hit = true;
      continue;
    }
    out << inst.label() << ": exact = " << result.value.str() << ", conjectured = " << want.str()
        << (result.value == want ? " -> agree" : " -> DIFFER") << "\n";
  }
  return budget_hit ? kBudget : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact worst-case analysis of fixed-pool-size group testing"};
  app.require_subcommand(1);

  CommonArgs common;

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "compute M^[k](d,n) or M(d,n) exactly");
  int s_n = 0, s_d = 0, s_k = 0;
  bool s_unrestricted = false;
  std::string s_cache;
  solve_cmd->add_option("--n", s_n, "item count")->required();
  solve_cmd->add_option("--d", s_d, "defective count")->required();
  auto* s_k_opt = solve_cmd->add_option("--k", s_k, "pool size (fixed-k mode)");
  auto* s_u_opt = solve_cmd->add_flag("--unrestricted", s_unrestricted, "pools of any size");
  s_k_opt->excludes(s_u_opt);
  s_u_opt->excludes(s_k_opt);
  solve_cmd->add_option("--budget-secs", common.budget_secs, "abort after this many seconds");
  solve_cmd->add_option("--cache", s_cache, "result cache file to read and append");
  solve_cmd->add_option("--threads", common.threads, "solver threads (default 1)");

  // run
  auto* run_cmd = app.add_subcommand("run", "evaluate a strategy's exact worst case");
  std::string r_name;
  int r_n = 0, r_d = 0;
  int r_k = -1;
  bool r_trace = false;
  run_cmd->add_option("--strategy", r_name, "individual|complement|halving|halving-padded|pairwise-d2|pairwise-general")
      ->required();
  run_cmd->add_option("--n", r_n, "item count")->required();
  run_cmd->add_option("--d", r_d, "defective count")->required();
  auto* r_k_opt = run_cmd->add_option("--k", r_k, "pool size");
  run_cmd->add_flag("--trace", r_trace, "print the worst-case branch");

  // table
  auto* table_cmd = app.add_subcommand("table", "tabulate M^[k](d,n) over a range of n");
  int t_d = 0, t_k = 0, t_min = 0, t_max = 0;
  std::string t_format = "plain";
  std::string t_cache;
  table_cmd->add_option("--d", t_d, "defective count")->required();
  table_cmd->add_option("--k", t_k, "pool size")->required();
  table_cmd->add_option("--n-min", t_min, "first n")->required();
  table_cmd->add_option("--n-max", t_max, "last n")->required();
  table_cmd->add_option("--format", t_format, "plain|csv|latex");
  table_cmd->add_option("--cache", t_cache, "result cache file to read and append");
  table_cmd->add_option("--threads", common.threads, "solver threads (default 1)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "cross-check the registered closed forms");
  std::string v_suite;
  bool v_fast = false;
  verify_cmd->add_option("--suite", v_suite, "the only suite is 'paper'")->required();
  verify_cmd->add_flag("--fast", v_fast, "skip instances that need more than ~10s");
  verify_cmd->add_option("--threads", common.threads, "solver threads (default 1)");

  // conjecture
  auto* conj_cmd = app.add_subcommand("conjecture", "scan exact values against ceil(n/2)+2d-3");
  int c_d = 0, c_n_max = 0;
  conj_cmd->add_option("--d", c_d, "defective count (>= 3)")->required();
  conj_cmd->add_option("--n-max", c_n_max, "largest n to scan")->required();
  conj_cmd->add_option("--budget-secs", common.budget_secs, "per-instance budget (default 600)");
  conj_cmd->add_option("--threads", common.threads, "solver threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      if (!s_unrestricted && s_k_opt->count() == 0) {
        err << "solve needs exactly one of --k or --unrestricted\n";
        return kUsage;
      }
      const Instance inst =
          s_unrestricted ? Instance::unrestricted(s_n, s_d) : Instance::fixed(s_n, s_d, s_k);
      return cmd_solve(inst, common, s_cache, out, err);
    }
    if (run_cmd->parsed()) {
      return cmd_run(r_name, r_n, r_d,
                     r_k_opt->count() > 0 ? std::optional<int>(r_k) : std::nullopt, r_trace, out,
                     err);
    }
    if (table_cmd->parsed()) {
      return cmd_table(t_d, t_k, t_min, t_max, t_format, t_cache, common, out, err);
    }
    if (verify_cmd->parsed()) {
      if (v_suite != "paper") {
        err << "unknown suite '" << v_suite << "'; the only suite is 'paper'\n";
        return kUsage;
      }
      return cmd_verify(v_fast, common, out, err);
    }
    if (conj_cmd->parsed()) {
      return cmd_conjecture(c_d, c_n_max, common, out, err);
    }
  } catch (const CacheConflictError& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const CacheParseError& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "no subcommand given\n";
  return kUsage;
}

}  // namespace grouptest::cli
