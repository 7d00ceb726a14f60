#include "doctest.h"
#include "grouptest/evaluator.hpp"
#include "grouptest/strategy.hpp"

using namespace grouptest;

namespace {

Mask mk(std::initializer_list<int> items) {
  Mask m = 0;
  for (int i : items) m |= item_bit(i);
  return m;
}

// Negative control: always announces {0, ..., d-1} without testing.
class AlwaysFirst final : public Strategy {
 public:
  explicit AlwaysFirst(Instance inst) : Strategy(inst) {}
  std::string_view name() const noexcept override { return "always-first"; }

 protected:
  Decision next_move(const History&, const CandidateFamily&) const override {
    return Decision::conclude(full_mask(instance_.d));
  }
};

// Negative control: loops on the same uninformative question forever.
class StuckOnZero final : public Strategy {
 public:
  explicit StuckOnZero(Instance inst) : Strategy(inst) {}
  std::string_view name() const noexcept override { return "stuck-on-zero"; }

 protected:
  Decision next_move(const History&, const CandidateFamily&) const override {
    return Decision::test(Pool{item_bit(0)});
  }
};

// Negative control: emits a pool of the wrong size.
class WrongSize final : public Strategy {
 public:
  explicit WrongSize(Instance inst) : Strategy(inst) {}
  std::string_view name() const noexcept override { return "wrong-size"; }

 protected:
  Decision next_move(const History&, const CandidateFamily&) const override {
    return Decision::test(Pool{full_mask(instance_.k + 1)});
  }
};

// Exhaustive truthful simulation, the slow way, for cross-checking the
// outcome-tree maximum.
std::uint64_t max_truthful_tests(const Strategy& s) {
  const Instance& inst = s.instance();
  std::uint64_t worst = 0;
  for (Mask truth : combinations(inst.n, inst.d)) {
    History history;
    while (true) {
      const Decision d = s.decide(history);
      if (!d.is_test()) break;
      history.push_back(Step{d.pool, pool_outcome(d.pool, truth, inst.n)});
    }
    worst = std::max<std::uint64_t>(worst, history.size());
  }
  return worst;
}

}  // namespace

TEST_CASE("worst_case_tests on the reference strategies") {
  const auto individual = make_strategy("individual", Instance::fixed(4, 1, 1));
  const auto r1 = worst_case_tests(*individual);
  CHECK(r1.worst_case == Value::finite(3));
  CHECK(r1.sound);

  const auto halving = make_strategy("halving", Instance::unrestricted(8, 1));
  const auto r2 = worst_case_tests(*halving);
  CHECK(r2.worst_case == Value::finite(3));
  CHECK(r2.sound);
  CHECK(r2.branches_explored == 8);  // leaves partition the eight candidates

  const auto pairwise = make_strategy("pairwise-d2", Instance::fixed(6, 2, 2));
  const auto r3 = worst_case_tests(*pairwise);
  CHECK(r3.worst_case == Value::finite(5));
  CHECK(r3.sound);
}

TEST_CASE("certify_sound agrees with the outcome-tree soundness flag") {
  CHECK(certify_sound(*make_strategy("complement", Instance::fixed(4, 2, 2))));
  CHECK(certify_sound(*make_strategy("halving-padded", Instance::fixed(6, 1, 4))));

  const AlwaysFirst broken(Instance::fixed(5, 2, 2));
  CHECK_FALSE(certify_sound(broken));
  const auto report = worst_case_tests(broken);
  CHECK_FALSE(report.sound);

  for (const char* name : {"individual", "complement"}) {
    for (int n = 2; n <= 6; ++n) {
      for (int d = 1; d < n; ++d) {
        const Instance inst = Instance::fixed(n, d, name[0] == 'i' ? 1 : n - d);
        const auto s = make_strategy(name, inst);
        const auto r = worst_case_tests(*s);
        CHECK(certify_sound(*s) == r.sound);
        CHECK(r.worst_case == Value::finite(max_truthful_tests(*s)));
      }
    }
  }
}

TEST_CASE("illegal pools and nontermination are reported as typed errors") {
  const StuckOnZero stuck(Instance::fixed(4, 1, 1));
  CHECK_THROWS_AS((void)worst_case_tests(stuck), EvaluatorError);

  const WrongSize wrong(Instance::fixed(5, 1, 2));
  try {
    (void)worst_case_tests(wrong);
    FAIL_CHECK("expected an illegal-pool error");
  } catch (const EvaluatorError& e) {
    CHECK(e.code() == EvaluatorError::Code::illegal_pool);
  }
}

TEST_CASE("the worst trace is the lexicographically first maximum branch") {
  const auto s = make_strategy("individual", Instance::fixed(3, 1, 1));
  const auto report = worst_case_tests(*s);
  CHECK(report.worst_case == Value::finite(2));
  REQUIRE(report.worst_trace.size() == 2);
  CHECK(report.worst_trace[0].pool.members == mk({0}));
  CHECK(report.worst_trace[0].outcome == Outcome::pure);
  CHECK(report.worst_trace[1].pool.members == mk({1}));
  CHECK(report.worst_trace[1].outcome == Outcome::contaminated);

  // Deterministic: a second evaluation reproduces the identical report.
  const auto again = worst_case_tests(*s);
  CHECK(again.worst_case == report.worst_case);
  CHECK(again.worst_trace == report.worst_trace);
  CHECK(again.branches_explored == report.branches_explored);
}

TEST_CASE("a strategy that concludes immediately reports zero tests") {
  const auto s = make_strategy("halving", Instance::unrestricted(1, 1));
  const auto report = worst_case_tests(*s);
  CHECK(report.worst_case == Value::finite(0));
  CHECK(report.sound);
  CHECK(report.branches_explored == 1);
}
