#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grouptest/strategy.hpp"
#include "grouptest/value.hpp"

namespace grouptest {

class EvaluatorError : public std::runtime_error {
 public:
  enum class Code { illegal_pool, nonterminating };

  EvaluatorError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] Code code() const noexcept { return code_; }

 private:
  Code code_;
};

struct EvaluationReport {
  /// Maximum test count over all consistent outcome sequences.
  Value worst_case = Value::finite(0);
  /// True iff every branch ended in a Conclude naming the unique remaining candidate.
  bool sound = true;
  /// The lexicographically first branch attaining the maximum (contaminated
  /// explored before pure).
  std::vector<Step> worst_trace;
  /// Number of leaves (Conclude decisions) in the outcome tree.
  std::uint64_t branches_explored = 0;
};

/// Explores the full outcome tree of the strategy, following every outcome
/// consistent with at least one remaining candidate. Throws EvaluatorError if
/// the strategy emits an illegal pool or exceeds the C(n, d) depth bound.
[[nodiscard]] EvaluationReport worst_case_tests(const Strategy& strategy);

/// Simulates the strategy against every possible true defective set, with
/// truthful outcomes; true iff every run concludes exactly the truth.
/// Agrees with worst_case_tests().sound by construction of the outcome tree.
[[nodiscard]] bool certify_sound(const Strategy& strategy);

}  // namespace grouptest
