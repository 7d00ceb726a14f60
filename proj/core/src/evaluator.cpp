#include "grouptest/evaluator.hpp"

#include <string>

namespace grouptest {

namespace {

void check_pool_legal(const Instance& inst, const Pool& pool) {
  if ((pool.members & ~full_mask(inst.n)) != 0) {
    throw EvaluatorError(EvaluatorError::Code::illegal_pool,
                         "strategy emitted pool " + pool.str() + " with items outside [0, n)");
  }
  const int size = pool.size();
  if (inst.is_fixed()) {
    if (size != inst.k) {
      throw EvaluatorError(EvaluatorError::Code::illegal_pool,
                           "strategy emitted pool " + pool.str() + " of size " +
                               std::to_string(size) + ", expected exactly " +
                               std::to_string(inst.k));
    }
  } else if (size == 0 || size == inst.n) {
    throw EvaluatorError(EvaluatorError::Code::illegal_pool,
                         "strategy emitted pool " + pool.str() +
                             "; unrestricted pools must be nonempty proper subsets");
  }
}

struct TreeWalk {
  const Strategy& strategy;
  std::uint64_t depth_bound;
  EvaluationReport report;
  History history;

  void explore(const CandidateFamily& family) {
    const Decision decision = strategy.decide(history, family);
    if (!decision.is_test()) {
      ++report.branches_explored;
      if (!(family.solved() && family.sole() == decision.defectives)) {
        report.sound = false;
      }
      const Value tests = Value::finite(history.size());
      if (report.branches_explored == 1 || tests > report.worst_case) {
        report.worst_case = tests;
        report.worst_trace = history;
      }
      return;
    }
    check_pool_legal(strategy.instance(), decision.pool);
    if (history.size() >= depth_bound) {
      throw EvaluatorError(EvaluatorError::Code::nonterminating,
                           "strategy exceeded the C(n,d) depth bound of " +
                               std::to_string(depth_bound));
    }
    for (Outcome outcome : {Outcome::contaminated, Outcome::pure}) {
      CandidateFamily child = family.filtered(decision.pool, outcome);
      if (child.empty()) continue;  // the adversary may only answer consistently
      history.push_back(Step{decision.pool, outcome});
      explore(child);
      history.pop_back();
    }
  }
};

}  // namespace

EvaluationReport worst_case_tests(const Strategy& strategy) {
  const Instance& inst = strategy.instance();
  TreeWalk walk{strategy, binomial(inst.n, inst.d), {}, {}};
  walk.explore(CandidateFamily::initial(inst.n, inst.d));
  return walk.report;
}

bool certify_sound(const Strategy& strategy) {
  const Instance& inst = strategy.instance();
  const std::uint64_t depth_bound = binomial(inst.n, inst.d);
  for (Mask truth : combinations(inst.n, inst.d)) {
    History history;
    CandidateFamily family = CandidateFamily::initial(inst.n, inst.d);
    while (true) {
      const Decision decision = strategy.decide(history, family);
      if (!decision.is_test()) {
        if (decision.defectives != truth) return false;
        break;
      }
      check_pool_legal(inst, decision.pool);
      if (history.size() >= depth_bound) {
        throw EvaluatorError(EvaluatorError::Code::nonterminating,
                             "strategy exceeded the C(n,d) depth bound of " +
                                 std::to_string(depth_bound));
      }
      const Outcome outcome = pool_outcome(decision.pool, truth, inst.n);
      history.push_back(Step{decision.pool, outcome});
      family = family.filtered(decision.pool, outcome);
    }
  }
  return true;
}

}  // namespace grouptest
