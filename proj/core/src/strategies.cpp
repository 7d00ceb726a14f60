#include "grouptest/strategy.hpp"

#include <algorithm>
#include <string>

#include "grouptest/formulas.hpp"

namespace grouptest {

namespace {

// Lowest `count` items of `from`, as a mask.
Mask lowest_items(Mask from, int count) {
  Mask out = 0;
  for (int taken = 0; taken < count; ++taken) {
    if (from == 0) throw std::logic_error("lowest_items: not enough items available");
    const Mask low = from & (~from + 1);
    out |= low;
    from ^= low;
  }
  return out;
}

// Items provably pure given the history: excluded from every candidate.
Mask pure_mask(const CandidateFamily& family) {
  return full_mask(family.n()) & ~family.live_mask();
}

// The helper item the pairwise strategies test against: the first item of the
// first pure pair of the opening phase. When every pair came back
// contaminated (only possible with one defective per pair), the odd leftover
// item is pure instead. Fixed by the phase outcomes, so it never drifts
// between post-phase steps.
int pairwise_helper_item(const Instance& inst, const History& history) {
  const int pairs = inst.n / 2;
  Mask pure_pairs = 0;
  for (int i = 0; i < pairs; ++i) {
    if (history[i].outcome == Outcome::pure) pure_pairs |= history[i].pool.members;
  }
  if (pure_pairs != 0) return lowest_item(pure_pairs);
  if (inst.n % 2 == 1) return inst.n - 1;
  throw std::logic_error("pairwise strategies: no pure helper item exists");
}

// Extends `base` to exactly `size` members with the lowest provably-pure items.
Pool pad_with_pure(Mask base, int size, const CandidateFamily& family) {
  const int missing = size - popcount(base);
  if (missing < 0) throw std::logic_error("pad_with_pure: base larger than pool size");
  if (missing > 0) base |= lowest_items(pure_mask(family) & ~base, missing);
  return Pool{base};
}

// ---------------------------------------------------------------------------
// individual: k = 1, test items one by one in index order.
// ---------------------------------------------------------------------------

class IndividualTesting final : public Strategy {
 public:
  explicit IndividualTesting(Instance inst) : Strategy(inst) {
    if (!instance_.is_fixed() || instance_.k != 1) {
      throw StrategyError(StrategyError::Code::wrong_pool_size, "individual testing requires k = 1");
    }
    if (instance_.d <= 0 || instance_.d >= instance_.n) {
      throw StrategyError(StrategyError::Code::wrong_defective_count,
                          "individual testing requires 0 < d < n");
    }
  }

  std::string_view name() const noexcept override { return "individual"; }

 protected:
  Decision next_move(const History& history, const CandidateFamily&) const override {
    const int next = static_cast<int>(history.size());
    if (next >= instance_.n) throw std::logic_error("individual: ran out of items to test");
    return Decision::test(Pool{item_bit(next)});
  }
};

// ---------------------------------------------------------------------------
// complement: k = n - d, test all (n-d)-subsets but the last.
// ---------------------------------------------------------------------------

class ComplementEnumeration final : public Strategy {
 public:
  explicit ComplementEnumeration(Instance inst) : Strategy(inst) {
    if (instance_.d <= 0 || instance_.d >= instance_.n) {
      throw StrategyError(StrategyError::Code::wrong_defective_count,
                          "complement enumeration requires 0 < d < n");
    }
    if (!instance_.is_fixed() || instance_.k != instance_.n - instance_.d) {
      throw StrategyError(StrategyError::Code::wrong_pool_size,
                          "complement enumeration requires k = n - d");
    }
    pools_ = combinations_lex(instance_.n, instance_.k);
  }

  std::string_view name() const noexcept override { return "complement"; }

 protected:
  Decision next_move(const History& history, const CandidateFamily&) const override {
    const std::size_t next = history.size();
    if (next + 1 >= pools_.size()) {
      // After C(n,d)-1 tests a single candidate always remains.
      throw std::logic_error("complement: all scheduled pools already tested");
    }
    return Decision::test(Pool{pools_[next]});
  }

 private:
  std::vector<Mask> pools_;
};

// ---------------------------------------------------------------------------
// halving: d = 1, unrestricted pools.
// ---------------------------------------------------------------------------

class HalvingUnrestricted final : public Strategy {
 public:
  explicit HalvingUnrestricted(Instance inst) : Strategy(inst) {
    if (instance_.mode != PoolMode::unrestricted) {
      throw StrategyError(StrategyError::Code::wrong_mode, "halving requires unrestricted mode");
    }
    if (instance_.d != 1) {
      throw StrategyError(StrategyError::Code::wrong_defective_count, "halving requires d = 1");
    }
  }

  std::string_view name() const noexcept override { return "halving"; }

 protected:
  Decision next_move(const History&, const CandidateFamily& family) const override {
    const int m = static_cast<int>(family.size());
    const int subset = 1 << (ceil_log2(static_cast<std::uint64_t>(m)) - 1);
    return Decision::test(Pool{lowest_items(family.live_mask(), subset)});
  }
};

// ---------------------------------------------------------------------------
// halving-padded: d = 1, fixed k. Disjoint k-blocks first, then halving with
// pools padded to size k by items already known pure.
// ---------------------------------------------------------------------------

class HalvingPadded final : public Strategy {
 public:
  explicit HalvingPadded(Instance inst) : Strategy(inst) {
    if (!instance_.is_fixed() || instance_.k <= 0 || instance_.k >= instance_.n) {
      throw StrategyError(StrategyError::Code::wrong_pool_size,
                          "padded halving requires 0 < k < n");
    }
    if (instance_.d != 1) {
      throw StrategyError(StrategyError::Code::wrong_defective_count,
                          "padded halving requires d = 1");
    }
    if (!thm1_condition(instance_.n, instance_.k)) {
      throw StrategyError(StrategyError::Code::theorem1_condition_not_met,
                          "condition of Theorem 1 not met");
    }
    phase_pools_ = static_cast<int>(ceil_div(instance_.n, instance_.k)) - 2;
  }

  std::string_view name() const noexcept override { return "halving-padded"; }

 protected:
  Decision next_move(const History& history, const CandidateFamily& family) const override {
    const int n = instance_.n;
    const int k = instance_.k;
    const bool in_phase =
        static_cast<int>(history.size()) < phase_pools_ &&
        std::all_of(history.begin(), history.end(),
                    [](const Step& s) { return s.outcome == Outcome::pure; });
    if (in_phase) {
      const int block = static_cast<int>(history.size());
      const Mask pool = full_mask(k) << (block * k);
      return Decision::test(Pool{pool});
    }
    // Halving on the current candidate block. The planned subset holds
    // 2^(ceil(log2 m) - 1) candidates; when too few pure items exist to pad
    // the pool up to k, the subset grows to keep the pool legal.
    const int m = static_cast<int>(family.size());
    int subset = std::min(1 << (ceil_log2(static_cast<std::uint64_t>(m)) - 1), k);
    subset = std::max(subset, k - (n - m));  // n - m items are provably pure
    const Mask base = lowest_items(family.live_mask(), subset);
    return Decision::test(pad_with_pure(base, k, family));
  }

 private:
  int phase_pools_ = 0;
};

// ---------------------------------------------------------------------------
// pairwise-d2: d = 2, k = 2, n >= 5. Disjoint pairs, then resolve the one or
// two contaminated pairs against a known pure item.
// ---------------------------------------------------------------------------

class PairwiseD2 final : public Strategy {
 public:
  explicit PairwiseD2(Instance inst) : Strategy(inst) {
    if (!instance_.is_fixed() || instance_.k != 2) {
      throw StrategyError(StrategyError::Code::wrong_pool_size, "pairwise-d2 requires k = 2");
    }
    if (instance_.d != 2) {
      throw StrategyError(StrategyError::Code::wrong_defective_count, "pairwise-d2 requires d = 2");
    }
    if (instance_.n < 5) {
      throw StrategyError(StrategyError::Code::population_too_small, "pairwise-d2 requires n >= 5");
    }
  }

  std::string_view name() const noexcept override { return "pairwise-d2"; }

 protected:
  Decision next_move(const History& history, const CandidateFamily&) const override {
    const int pairs = instance_.n / 2;
    const int done = static_cast<int>(history.size());
    if (done < pairs) {
      return Decision::test(Pool{Mask{3} << (2 * done)});
    }
    std::vector<Mask> contaminated;
    for (int i = 0; i < pairs; ++i) {
      if (history[i].outcome == Outcome::contaminated) {
        contaminated.push_back(history[i].pool.members);
      }
    }
    const int helper = pairwise_helper_item(instance_, history);
    const int post = done - pairs;
    if (contaminated.size() == 2) {
      // One defective in each pair; identify both with two helper tests.
      const Mask pair = post == 0 ? contaminated[0] : contaminated[1];
      return Decision::test(Pool{item_bit(lowest_item(pair)) | item_bit(helper)});
    }
    if (contaminated.size() == 1) {
      // n odd with one untested leftover item; probe the pair items in order.
      const auto items = mask_items(contaminated[0]);
      const int target = post == 0 ? items[0] : items[1];
      return Decision::test(Pool{item_bit(target) | item_bit(helper)});
    }
    throw std::logic_error("pairwise-d2: inconsistent history, no contaminated pair");
  }
};

// ---------------------------------------------------------------------------
// pairwise-general: k = 2, 3 <= d <= floor(n/2) - 1. Disjoint pairs, the odd
// leftover against a pure item, then per-pair or per-item resolution.
// ---------------------------------------------------------------------------

class PairwiseGeneral final : public Strategy {
 public:
  explicit PairwiseGeneral(Instance inst) : Strategy(inst) {
    if (!instance_.is_fixed() || instance_.k != 2) {
      throw StrategyError(StrategyError::Code::wrong_pool_size, "pairwise-general requires k = 2");
    }
    if (instance_.d < 3 || instance_.d > instance_.n / 2 - 1) {
      throw StrategyError(StrategyError::Code::wrong_defective_count,
                          "pairwise-general requires 3 <= d <= floor(n/2) - 1");
    }
  }

  std::string_view name() const noexcept override { return "pairwise-general"; }

 protected:
  Decision next_move(const History& history, const CandidateFamily& family) const override {
    const int n = instance_.n;
    const int pairs = n / 2;
    const bool odd = (n % 2) != 0;
    const int done = static_cast<int>(history.size());
    if (done < pairs) {
      return Decision::test(Pool{Mask{3} << (2 * done)});
    }
    const int helper = pairwise_helper_item(instance_, history);
    if (odd && done == pairs) {
      return Decision::test(Pool{item_bit(n - 1) | item_bit(helper)});
    }

    std::vector<Mask> contaminated;
    for (int i = 0; i < pairs; ++i) {
      if (history[i].outcome == Outcome::contaminated) {
        contaminated.push_back(history[i].pool.members);
      }
    }
    const Mask live = family.live_mask();
    const Mask confirmed = family.confirmed_mask();
    auto determined = [&](int item) {
      return ((live >> item) & 1) == 0 || ((confirmed >> item) & 1) == 1;
    };

    // Defectives still inside pairs; the leftover, once probed, is settled.
    int in_pairs = instance_.d;
    if (odd && ((confirmed >> (n - 1)) & 1) != 0) --in_pairs;
    const bool one_each = static_cast<int>(contaminated.size()) == in_pairs;

    for (Mask pair : contaminated) {
      for (int item : mask_items(pair)) {
        if (!determined(item)) {
          return Decision::test(Pool{item_bit(item) | item_bit(helper)});
        }
        // With exactly one defective per contaminated pair, settling the
        // first item settles the pair.
        if (one_each) break;
      }
    }
    throw std::logic_error("pairwise-general: inconsistent history, nothing left to test");
  }
};

}  // namespace

Decision Strategy::decide(const History& history) const {
  CandidateFamily family = CandidateFamily::initial(instance_.n, instance_.d);
  for (const Step& step : history) {
    family = family.filtered(step.pool, step.outcome);
  }
  return decide(history, family);
}

Decision Strategy::decide(const History& history, const CandidateFamily& family) const {
  if (family.empty()) {
    throw std::logic_error("Strategy::decide: history is inconsistent (empty family)");
  }
  if (family.solved()) return Decision::conclude(family.sole());
  return next_move(history, family);
}

const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names = {
      "individual", "complement", "halving", "halving-padded", "pairwise-d2", "pairwise-general",
  };
  return names;
}

std::unique_ptr<Strategy> make_strategy(std::string_view name, const Instance& instance) {
  if (name == "individual") return std::make_unique<IndividualTesting>(instance);
  if (name == "complement") return std::make_unique<ComplementEnumeration>(instance);
  if (name == "halving") return std::make_unique<HalvingUnrestricted>(instance);
  if (name == "halving-padded") return std::make_unique<HalvingPadded>(instance);
  if (name == "pairwise-d2") {
    if (instance.is_fixed() && instance.k == 2 && instance.d == 2) {
      if (instance.n == 3) {
        throw StrategyError(StrategyError::Code::unsolvable_instance,
                            "pairwise-d2: k = 2 exceeds n - d at n = 3, no strategy can succeed");
      }
      if (instance.n == 4) return std::make_unique<ComplementEnumeration>(instance);
    }
    return std::make_unique<PairwiseD2>(instance);
  }
  if (name == "pairwise-general") return std::make_unique<PairwiseGeneral>(instance);
  throw StrategyError(StrategyError::Code::unknown_name,
                      "unknown strategy '" + std::string(name) + "'");
}

}  // namespace grouptest
