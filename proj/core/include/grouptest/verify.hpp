#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grouptest/value.hpp"

namespace grouptest {

/// One verification check: a claim about M^[k](d, n) cross-checked against
/// the exact solver and the strategy evaluator.
struct CheckResult {
  std::string id;     // stable anchor, e.g. "prop1", "thm2"
  std::string title;  // what the check asserts
  bool pass = true;
  bool blocking = true;  // the conjecture scan reports without failing the suite
  std::string detail;
  double seconds = 0.0;
  std::optional<double> time_limit_secs{};

  /// A blocking check is OK when its values match and it met its time budget.
  [[nodiscard]] bool ok() const {
    if (!blocking) return true;
    if (!pass) return false;
    return !time_limit_secs || seconds <= *time_limit_secs;
  }
};

struct VerifyOptions {
  /// Skips the n = 9, d = 2 solver point and the conjecture scan; every
  /// remaining instance solves in well under ten seconds.
  bool fast = false;
  int threads = 1;
  double conjecture_budget_secs = 600.0;
  std::ostream* progress = nullptr;  // per-check progress, diagnostic stream
  std::string only;                  // run a single check by id when nonempty
};

/// Runs every check of the verification suite, in order.
[[nodiscard]] std::vector<CheckResult> run_paper_suite(const VerifyOptions& options = {});

[[nodiscard]] bool all_checks_ok(const std::vector<CheckResult>& results);

}  // namespace grouptest
