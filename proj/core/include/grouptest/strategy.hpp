#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grouptest/family.hpp"

namespace grouptest {

struct Step {
  Pool pool;
  Outcome outcome = Outcome::pure;
  friend bool operator==(const Step&, const Step&) = default;
};
using History = std::vector<Step>;

/// What a strategy wants next: run a test, or announce the defective set.
struct Decision {
  enum class Kind { test, conclude };

  Kind kind = Kind::test;
  Pool pool{};
  Mask defectives = 0;

  static Decision test(Pool p) { return Decision{Kind::test, p, 0}; }
  static Decision conclude(Mask m) { return Decision{Kind::conclude, Pool{}, m}; }

  [[nodiscard]] bool is_test() const noexcept { return kind == Kind::test; }
};

class StrategyError : public std::invalid_argument {
 public:
  enum class Code {
    unknown_name,
    wrong_pool_size,
    wrong_defective_count,
    wrong_mode,
    population_too_small,
    theorem1_condition_not_met,
    unsolvable_instance,
  };

  StrategyError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  [[nodiscard]] Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// A deterministic decision procedure: the next decision is a pure function
/// of the instance and the history of (pool, outcome) pairs. Instances are
/// immutable once constructed; one object can serve many playouts, and
/// distinct playouts may run in parallel.
class Strategy {
 public:
  virtual ~Strategy() = default;

  [[nodiscard]] const Instance& instance() const noexcept { return instance_; }
  [[nodiscard]] virtual std::string_view name() const noexcept = 0;

  /// Replays the history against the initial family, concludes as soon as a
  /// single candidate remains, and otherwise delegates to the algorithm.
  [[nodiscard]] Decision decide(const History& history) const;

  /// Same decision, with the replayed family supplied by a caller that
  /// already tracks it (the evaluator does). `family` must equal the filter
  /// of the initial family through `history`.
  [[nodiscard]] Decision decide(const History& history, const CandidateFamily& family) const;

 protected:
  explicit Strategy(Instance inst) : instance_(inst) { instance_.validate(); }

  [[nodiscard]] virtual Decision next_move(const History& history,
                                           const CandidateFamily& family) const = 0;

  Instance instance_;
};

/// Stable strategy names: individual, complement, halving, halving-padded,
/// pairwise-d2, pairwise-general.
[[nodiscard]] std::unique_ptr<Strategy> make_strategy(std::string_view name,
                                                      const Instance& instance);

[[nodiscard]] const std::vector<std::string>& strategy_names();

}  // namespace grouptest
