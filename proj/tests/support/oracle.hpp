#pragma once

// Test-only reference implementations, deliberately independent of the
// library's search: direct minimax over raw candidate lists, pools enumerated
// by listing combinations, no symmetry pruning, no admissible bounds, no
// iterative deepening. Desk scale only.

#include <algorithm>
#include <map>
#include <vector>

#include "grouptest/family.hpp"
#include "grouptest/instance.hpp"
#include "grouptest/value.hpp"

namespace testutil {

inline grouptest::Value oracle_exact_value(const grouptest::Instance& inst) {
  using grouptest::Mask;
  using grouptest::Value;

  std::vector<Mask> pools;
  if (inst.is_fixed()) {
    pools = grouptest::combinations(inst.n, inst.k);
  } else {
    for (Mask m = 1; m < grouptest::full_mask(inst.n); ++m) pools.push_back(m);
  }

  std::map<std::vector<Mask>, Value> memo;
  auto value = [&](auto&& self, const std::vector<Mask>& family) -> Value {
    if (family.size() <= 1) return Value::finite(0);
    const auto it = memo.find(family);
    if (it != memo.end()) return it->second;
    Value best = Value::infinite();
    for (Mask pool : pools) {
      std::vector<Mask> cont;
      std::vector<Mask> pure;
      for (Mask s : family) ((s & pool) != 0 ? cont : pure).push_back(s);
      if (cont.empty() || pure.empty()) continue;
      const Value vc = self(self, cont);
      const Value vp = self(self, pure);
      if (vc.is_infinite() || vp.is_infinite()) continue;
      best = std::min(best, Value::finite(std::max(vc.count(), vp.count()) + 1));
    }
    memo[family] = best;
    return best;
  };

  const std::vector<Mask> initial = grouptest::combinations(inst.n, inst.d);
  return value(value, initial);
}

/// Exhaustive search over all n! item permutations.
inline bool relabel_equivalent(const grouptest::CandidateFamily& a,
                               const grouptest::CandidateFamily& b) {
  using grouptest::Mask;
  if (a.n() != b.n() || a.d() != b.d() || a.size() != b.size()) return false;
  const int n = a.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  const std::vector<Mask> want(b.masks().begin(), b.masks().end());
  do {
    std::vector<Mask> mapped;
    mapped.reserve(a.size());
    for (Mask m : a.masks()) {
      Mask out = 0;
      for (int i : grouptest::mask_items(m)) out |= grouptest::item_bit(perm[static_cast<std::size_t>(i)]);
      mapped.push_back(out);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == want) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Applies an item permutation to every candidate.
inline grouptest::CandidateFamily permute_family(const grouptest::CandidateFamily& family,
                                                 const std::vector<int>& perm) {
  std::vector<grouptest::Mask> mapped;
  mapped.reserve(family.size());
  for (grouptest::Mask m : family.masks()) {
    grouptest::Mask out = 0;
    for (int i : grouptest::mask_items(m)) {
      out |= grouptest::item_bit(perm[static_cast<std::size_t>(i)]);
    }
    mapped.push_back(out);
  }
  return grouptest::CandidateFamily::from_masks(family.n(), family.d(), std::move(mapped));
}

}  // namespace testutil
