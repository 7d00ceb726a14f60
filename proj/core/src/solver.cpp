#include "grouptest/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <unordered_map>

#include "grouptest/canonical.hpp"
#include "grouptest/evaluator.hpp"
#include "grouptest/formulas.hpp"

namespace grouptest {

namespace {

using Clock = std::chrono::steady_clock;

// Proven bounds for one family. lo = infinite() means proven unsolvable;
// hi = infinite() means no achieving plan found yet, not unsolvability.
struct Bracket {
  Value lo = Value::finite(0);
  Value hi = Value::infinite();
};

// One candidate test, reduced to what matters: the partition it induces.
struct Split {
  Pool pool;  // realized pool, padding included; legal for the instance
  std::uint32_t cont = 0;
  std::uint32_t pure = 0;

  [[nodiscard]] int balance() const noexcept {
    return std::abs(static_cast<int>(cont) - static_cast<int>(pure));
  }
};

struct BudgetSignal {};

// Adversary bound: the smaller side of any split never exceeds s_max, and
// s_max never grows on subfamilies, so the adversary can hold at least
// m - j*s_max candidates alive through j tests, after which the information
// bound still applies.
int adversary_lower_bound(std::uint64_t m, std::uint64_t s_max) {
  int best = ceil_log2(m);
  for (std::uint64_t j = 1;; ++j) {
    if (m <= j * s_max + 1) {
      best = std::max(best, static_cast<int>(j));
      break;
    }
    best = std::max(best, static_cast<int>(j) + ceil_log2(m - j * s_max));
  }
  return best;
}

class Search {
 public:
  Search(const Instance& inst, const SolveConfig& cfg) : inst_(inst), cfg_(cfg) {
    if (cfg_.budget_secs) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*cfg_.budget_secs));
    }
  }

  // Enumerates one pool per distinct induced partition, up to verified item
  // symmetries, sorted by balance then pool mask. Pools containing an item
  // known defective are always uninformative and never generated; pads come
  // from items known pure.
  [[nodiscard]] std::vector<Split> expand(const CandidateFamily& family) const {
    const int n = inst_.n;
    const Mask live = family.live_mask();
    const Mask confirmed = family.confirmed_mask();
    const Mask active = live & ~confirmed;
    const Mask dead = full_mask(n) & ~live;
    const int n_active = popcount(active);
    const int n_dead = popcount(dead);

    int take_min = 1;
    int take_max = n_active;
    if (inst_.is_fixed()) {
      take_min = std::max(1, inst_.k - n_dead);
      take_max = std::min(inst_.k, n_active);
    }
    if (take_min > take_max) return {};

    std::vector<std::vector<int>> classes;
    for (auto& cls : symmetry_classes(family)) {
      std::vector<int> members;
      for (int item : cls) {
        if ((active >> item) & 1) members.push_back(item);
      }
      if (!members.empty()) classes.push_back(std::move(members));
    }

    const auto masks = family.masks();
    const std::size_t m = masks.size();
    const std::size_t sig_words = (m + 63) / 64;
    std::map<std::vector<std::uint64_t>, Split> by_partition;

    std::vector<int> counts(classes.size(), 0);
    auto emit = [&](int total) {
      Mask probe = 0;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int i = 0; i < counts[c]; ++i) probe |= item_bit(classes[c][i]);
      }
      std::vector<std::uint64_t> sig(sig_words, 0);
      std::uint32_t cont = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if ((masks[j] & probe) != 0) {
          sig[j / 64] |= std::uint64_t{1} << (j % 64);
          ++cont;
        }
      }
      const std::uint32_t pure = static_cast<std::uint32_t>(m) - cont;
      if (cont == 0 || pure == 0) return;  // uninformative
      Mask pool_mask = probe;
      if (inst_.is_fixed() && total < inst_.k) {
        Mask pads = dead;
        for (int need = inst_.k - total; need > 0; --need) {
          const Mask low = pads & (~pads + 1);
          pool_mask |= low;
          pads ^= low;
        }
      }
      auto [it, inserted] = by_partition.try_emplace(std::move(sig));
      if (inserted || pool_mask < it->second.pool.members) {
        it->second = Split{Pool{pool_mask}, cont, pure};
      }
    };

    // All per-class take counts with a total in [take_min, take_max].
    auto enumerate = [&](auto&& self, std::size_t c, int total) -> void {
      if (total > take_max) return;
      if (c == classes.size()) {
        if (total >= take_min) emit(total);
        return;
      }
      for (int x = 0; x <= static_cast<int>(classes[c].size()); ++x) {
        counts[c] = x;
        self(self, c + 1, total + x);
      }
      counts[c] = 0;
    };
    enumerate(enumerate, 0, 0);

    std::vector<Split> splits;
    splits.reserve(by_partition.size());
    for (auto& [sig, split] : by_partition) splits.push_back(split);
    std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) {
      if (a.balance() != b.balance()) return a.balance() < b.balance();
      return a.pool.members < b.pool.members;
    });
    return splits;
  }

  // Can `family` be identified within `budget` tests?
  [[nodiscard]] bool solvable_within(const CandidateFamily& family, int budget) {
    tick();
    const std::uint64_t m = family.size();
    if (m <= 1) return true;
    if (budget <= 0) return false;
    if (ceil_log2(m) > budget) return false;

    CanonicalKey key;
    if (cfg_.memo_enabled) {
      key = make_key(family);
      const Bracket snap = load(key);
      if (snap.lo > Value::finite(static_cast<std::uint64_t>(budget))) return false;
      if (snap.hi <= Value::finite(static_cast<std::uint64_t>(budget))) return true;
    }

    const auto splits = expand(family);
    if (splits.empty()) {
      // Non-singleton family without an informative pool: a dead end.
      if (cfg_.memo_enabled) raise_lo(key, Value::infinite());
      return false;
    }
    std::uint64_t s_max = 0;
    for (const Split& s : splits) {
      s_max = std::max<std::uint64_t>(s_max, std::min(s.cont, s.pure));
    }
    const int lb = adversary_lower_bound(m, s_max);
    if (lb > budget) {
      if (cfg_.memo_enabled) raise_lo(key, Value::finite(static_cast<std::uint64_t>(lb)));
      return false;
    }

    for (const Split& s : splits) {
      CandidateFamily cont = family.filtered(s.pool, Outcome::contaminated);
      CandidateFamily pure = family.filtered(s.pool, Outcome::pure);
      if (cont.size() < pure.size()) std::swap(cont, pure);
      if (solvable_within(cont, budget - 1) && solvable_within(pure, budget - 1)) {
        if (cfg_.memo_enabled) lower_hi(key, Value::finite(static_cast<std::uint64_t>(budget)));
        return true;
      }
    }
    if (cfg_.memo_enabled) raise_lo(key, Value::finite(static_cast<std::uint64_t>(budget) + 1));
    return false;
  }

  // One iterative-deepening level at the root, optionally parallel over the
  // root's candidate pools. The result never depends on the thread count.
  [[nodiscard]] bool root_level(const CandidateFamily& family, const std::vector<Split>& splits,
                                int budget) {
    if (budget <= 0 || ceil_log2(family.size()) > budget) return false;
    const int workers =
        cfg_.parallel_root ? std::min<int>(cfg_.threads, static_cast<int>(splits.size())) : 1;
    if (workers <= 1) {
      for (const Split& s : splits) {
        CandidateFamily cont = family.filtered(s.pool, Outcome::contaminated);
        CandidateFamily pure = family.filtered(s.pool, Outcome::pure);
        if (cont.size() < pure.size()) std::swap(cont, pure);
        if (solvable_within(cont, budget - 1) && solvable_within(pure, budget - 1)) return true;
      }
      return false;
    }
    std::vector<std::future<bool>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        bool any = false;
        for (std::size_t i = static_cast<std::size_t>(w); i < splits.size();
             i += static_cast<std::size_t>(workers)) {
          CandidateFamily cont = family.filtered(splits[i].pool, Outcome::contaminated);
          CandidateFamily pure = family.filtered(splits[i].pool, Outcome::pure);
          if (cont.size() < pure.size()) std::swap(cont, pure);
          if (solvable_within(cont, budget - 1) && solvable_within(pure, budget - 1)) any = true;
        }
        return any;
      }));
    }
    bool ok = false;
    std::exception_ptr failure;
    for (auto& f : futures) {
      try {
        ok = f.get() || ok;
      } catch (...) {
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return ok;
  }

  [[nodiscard]] std::uint64_t nodes() const noexcept {
    return nodes_.load(std::memory_order_relaxed);
  }

 private:
  [[nodiscard]] CanonicalKey make_key(const CandidateFamily& family) const {
    return cfg_.canonicalization_enabled ? canonical_key(family) : raw_key(family);
  }

  void tick() {
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed);
    if (deadline_ && (n & 1023u) == 0 && Clock::now() > *deadline_) throw BudgetSignal{};
  }

  struct Shard {
    std::mutex mu;
    std::unordered_map<CanonicalKey, Bracket, CanonicalKeyHash> map;
  };

  Shard& shard_for(const CanonicalKey& key) {
    return shards_[CanonicalKeyHash{}(key) % shards_.size()];
  }

  [[nodiscard]] Bracket load(const CanonicalKey& key) {
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mu);
    const auto it = s.map.find(key);
    return it == s.map.end() ? Bracket{} : it->second;
  }

  void raise_lo(const CanonicalKey& key, Value v) {
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mu);
    Bracket& b = s.map[key];
    b.lo = std::max(b.lo, v);
  }

  void lower_hi(const CanonicalKey& key, Value v) {
    Shard& s = shard_for(key);
    std::lock_guard lock(s.mu);
    Bracket& b = s.map[key];
    b.hi = std::min(b.hi, v);
  }

  const Instance inst_;
  const SolveConfig cfg_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::array<Shard, 32> shards_;
};

// Best achievable bound from the constructive strategies that apply to the
// instance, each verified by exhaustive evaluation rather than trusted.
std::optional<Value> greedy_upper_bound(const Instance& inst) {
  constexpr std::uint64_t kEvalCap = 200000;
  std::optional<Value> best;
  auto consider = [&](const char* name) {
    try {
      if (binomial(inst.n, inst.d) > kEvalCap) return;
      const auto strategy = make_strategy(name, inst);
      const EvaluationReport report = worst_case_tests(*strategy);
      if (report.sound && (!best || report.worst_case < *best)) best = report.worst_case;
    } catch (const StrategyError&) {
      // not applicable to this instance
    }
  };
  if (inst.mode == PoolMode::unrestricted) {
    if (inst.d == 1) consider("halving");
  } else {
    if (inst.k == 1) consider("individual");
    if (inst.d == 1 && inst.k > 0 && inst.k < inst.n) consider("halving-padded");
    if (inst.d == 2 && inst.k == 2 && inst.n >= 4) consider("pairwise-d2");
    if (inst.k == 2 && inst.d >= 3 && inst.d <= inst.n / 2 - 1) consider("pairwise-general");
    if (inst.k == inst.n - inst.d && inst.d > 0 && inst.d < inst.n) {
      // Complement enumeration needs C(n,d) - 1 tests by construction.
      const Value v = Value::finite(binomial(inst.n, inst.d) - 1);
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

}  // namespace

SolveResult solve(const Instance& instance, const SolveConfig& config) {
  instance.validate();
  const auto started = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - started).count();
  };

  SolveResult result;
  const CandidateFamily root = CandidateFamily::initial(instance.n, instance.d);
  if (root.size() <= 1) {
    result.value = Value::finite(0);
    result.lower_bound = result.value;
    result.upper_bound = result.value;
    result.stats.seconds = elapsed();
    return result;
  }

  Search search(instance, config);
  const auto splits = search.expand(root);
  if (splits.empty()) {
    result.value = Value::infinite();
    result.lower_bound = Value::infinite();
    result.stats.seconds = elapsed();
    return result;
  }

  const std::uint64_t m = root.size();
  std::uint64_t s_max = 0;
  for (const Split& s : splits) s_max = std::max<std::uint64_t>(s_max, std::min(s.cont, s.pure));
  const int start = adversary_lower_bound(m, s_max);
  // Any solvable family is solvable within |family| - 1 tests.
  const std::uint64_t cap = m - 1;
  const std::optional<Value> ub = greedy_upper_bound(instance);

  Value proven_lb = Value::finite(static_cast<std::uint64_t>(start));
  try {
    for (std::uint64_t t = static_cast<std::uint64_t>(start); t <= cap; ++t) {
      if (search.root_level(root, splits, static_cast<int>(t))) {
        result.value = Value::finite(t);
        result.lower_bound = result.value;
        result.upper_bound = result.value;
        result.stats.nodes = search.nodes();
        result.stats.seconds = elapsed();
        return result;
      }
      proven_lb = Value::finite(t + 1);
      if (ub && *ub <= Value::finite(t)) {
        throw std::logic_error("solver refuted an evaluator-verified strategy bound at " +
                               instance.label());
      }
    }
  } catch (const BudgetSignal&) {
    result.status = SolveResult::Status::budget_exceeded;
    result.lower_bound = proven_lb;
    result.upper_bound = ub;
    result.stats.nodes = search.nodes();
    result.stats.seconds = elapsed();
    return result;
  }

  if (ub) {
    throw std::logic_error("solver exhausted the depth cap below a verified strategy bound at " +
                           instance.label());
  }
  result.value = Value::infinite();
  result.lower_bound = Value::infinite();
  result.stats.nodes = search.nodes();
  result.stats.seconds = elapsed();
  return result;
}

Value exact_value(const Instance& instance, const SolveConfig& config) {
  SolveResult result = solve(instance, config);
  if (!result.is_exact()) throw BudgetExceededError(std::move(result));
  return result.value;
}

int it_lower_bound(const CandidateFamily& family) {
  if (family.empty()) throw std::invalid_argument("it_lower_bound: empty family");
  return ceil_log2(family.size());
}

bool is_solvable(const Instance& instance) {
  instance.validate();
  Search search(instance, SolveConfig{});
  auto walk = [&](auto&& self, const CandidateFamily& family) -> bool {
    if (family.size() <= 1) return true;
    const auto splits = search.expand(family);
    if (splits.empty()) return false;
    const Split& s = splits.front();
    return self(self, family.filtered(s.pool, Outcome::contaminated)) &&
           self(self, family.filtered(s.pool, Outcome::pure));
  };
  return walk(walk, CandidateFamily::initial(instance.n, instance.d));
}

int DecisionTree::depth() const {
  if (nodes.empty()) return 0;
  std::vector<int> memo(nodes.size(), -1);
  auto depth_of = [&](auto&& self, std::int32_t idx) -> int {
    const Node& node = nodes[static_cast<std::size_t>(idx)];
    if (node.leaf) return 0;
    if (memo[static_cast<std::size_t>(idx)] >= 0) return memo[static_cast<std::size_t>(idx)];
    const int d = 1 + std::max(self(self, node.on_contaminated), self(self, node.on_pure));
    memo[static_cast<std::size_t>(idx)] = d;
    return d;
  };
  return depth_of(depth_of, 0);
}

DecisionTree extract_tree(const Instance& instance, const SolveConfig& config) {
  const SolveResult solved = solve(instance, config);
  if (!solved.is_exact()) throw BudgetExceededError(solved);
  if (solved.value.is_infinite()) {
    throw std::domain_error("extract_tree: " + instance.label() + " is unsolvable");
  }

  // Re-search with a hot memo; every feasibility question below was already
  // answered during the solve when memoization is on.
  Search search(instance, config);
  DecisionTree tree;

  auto build = [&](auto&& self, const CandidateFamily& family, int budget) -> std::int32_t {
    const auto idx = static_cast<std::int32_t>(tree.nodes.size());
    tree.nodes.emplace_back();
    if (family.solved()) {
      tree.nodes[static_cast<std::size_t>(idx)].leaf = true;
      tree.nodes[static_cast<std::size_t>(idx)].conclusion = family.sole();
      return idx;
    }
    for (const Split& s : search.expand(family)) {
      CandidateFamily cont = family.filtered(s.pool, Outcome::contaminated);
      CandidateFamily pure = family.filtered(s.pool, Outcome::pure);
      if (search.solvable_within(cont, budget - 1) && search.solvable_within(pure, budget - 1)) {
        tree.nodes[static_cast<std::size_t>(idx)].pool = s.pool;
        const std::int32_t ci = self(self, cont, budget - 1);
        const std::int32_t pi = self(self, pure, budget - 1);
        tree.nodes[static_cast<std::size_t>(idx)].on_contaminated = ci;
        tree.nodes[static_cast<std::size_t>(idx)].on_pure = pi;
        return idx;
      }
    }
    throw std::logic_error("extract_tree: no pool achieves the proven value");
  };
  build(build, CandidateFamily::initial(instance.n, instance.d),
        static_cast<int>(solved.value.count()));
  return tree;
}

Decision TreeStrategy::next_move(const History& history, const CandidateFamily&) const {
  std::size_t idx = 0;
  for (const Step& step : history) {
    const DecisionTree::Node& node = tree_.nodes[idx];
    if (node.leaf || step.pool != node.pool) {
      throw std::logic_error("TreeStrategy: history diverges from the decision tree");
    }
    const std::int32_t next =
        step.outcome == Outcome::contaminated ? node.on_contaminated : node.on_pure;
    if (next < 0) throw std::logic_error("TreeStrategy: missing child for consistent outcome");
    idx = static_cast<std::size_t>(next);
  }
  const DecisionTree::Node& node = tree_.nodes[idx];
  if (node.leaf) return Decision::conclude(node.conclusion);
  return Decision::test(node.pool);
}

}  // namespace grouptest
