#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grouptest/family.hpp"
#include "grouptest/strategy.hpp"
#include "grouptest/value.hpp"

namespace grouptest {

/// Tuning knobs only: none of these may change the returned Value.
struct SolveConfig {
  bool memo_enabled = true;
  bool canonicalization_enabled = true;
  std::optional<double> budget_secs{};
  bool parallel_root = false;
  int threads = 1;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Outcome of an exact solve. A budget-exceeded result carries the best
/// bracket proven so far and is never mistakable for an exact Value.
struct SolveResult {
  enum class Status { exact, budget_exceeded };

  Status status = Status::exact;
  Value value = Value::finite(0);        // meaningful only when exact
  Value lower_bound = Value::finite(0);  // proven in either case
  std::optional<Value> upper_bound{};    // achievable bound when one is known
  SolveStats stats{};

  [[nodiscard]] bool is_exact() const noexcept { return status == Status::exact; }
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(SolveResult partial)
      : std::runtime_error("solver budget exceeded; best bracket [" +
                           partial.lower_bound.str() + ", " +
                           (partial.upper_bound ? partial.upper_bound->str() : "?") + "]"),
        partial_(std::move(partial)) {}
  [[nodiscard]] const SolveResult& partial() const noexcept { return partial_; }

 private:
  SolveResult partial_;
};

/// M^[k](d, n) or M(d, n) by minimax over candidate families. The candidate
/// family is a sufficient statistic for optimal play, so search state is the
/// family alone.
[[nodiscard]] SolveResult solve(const Instance& instance, const SolveConfig& config = {});

/// Convenience wrapper; throws BudgetExceededError instead of returning a
/// partial result.
[[nodiscard]] Value exact_value(const Instance& instance, const SolveConfig& config = {});

/// Decides finiteness of the exact value without computing it: walks a greedy
/// decision tree (first informative pool everywhere). A completed walk is an
/// upper-bound witness; a reachable dead-end subfamily certifies infinity,
/// because the minimax value is monotone under taking subfamilies.
[[nodiscard]] bool is_solvable(const Instance& instance);

/// ceil(log2 |family|): binary outcomes cannot distinguish faster.
[[nodiscard]] int it_lower_bound(const CandidateFamily& family);

/// An optimal adaptive testing plan: a witness for the exact value.
struct DecisionTree {
  struct Node {
    Pool pool{};
    std::int32_t on_contaminated = -1;
    std::int32_t on_pure = -1;
    Mask conclusion = 0;
    bool leaf = false;
  };

  std::vector<Node> nodes;  // root at index 0

  [[nodiscard]] int depth() const;
};

/// Extracts a tree achieving the exact value. Throws std::domain_error when
/// the instance is unsolvable.
[[nodiscard]] DecisionTree extract_tree(const Instance& instance, const SolveConfig& config = {});

/// Replays a decision tree as a strategy, for evaluation and certification.
class TreeStrategy final : public Strategy {
 public:
  TreeStrategy(Instance instance, DecisionTree tree)
      : Strategy(instance), tree_(std::move(tree)) {}

  [[nodiscard]] std::string_view name() const noexcept override { return "decision-tree"; }
  [[nodiscard]] const DecisionTree& tree() const noexcept { return tree_; }

 protected:
  Decision next_move(const History& history, const CandidateFamily& family) const override;

 private:
  DecisionTree tree_;
};

}  // namespace grouptest
