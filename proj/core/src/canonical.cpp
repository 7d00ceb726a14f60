#include "grouptest/canonical.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace grouptest {

namespace {

// Iterative signature refinement on the item/candidate incidence structure.
// Colors are dense ranks of label-independent signatures, so two items receive
// the same color sequence under any relabeling of the family.
struct Coloring {
  std::vector<int> item;  // size n
  int count = 0;
};

Coloring refine(const CandidateFamily& family, std::vector<int> seed, int seed_count) {
  const int n = family.n();
  const auto masks = family.masks();
  Coloring c{std::move(seed), seed_count};
  for (int round = 0; round < n + 1; ++round) {
    // Candidate color = multiset of member item colors.
    std::map<std::vector<int>, int> cand_rank;
    std::vector<int> cand_color(masks.size());
    {
      std::vector<std::vector<int>> sigs(masks.size());
      for (std::size_t j = 0; j < masks.size(); ++j) {
        for (int i : mask_items(masks[j])) sigs[j].push_back(c.item[i]);
        std::sort(sigs[j].begin(), sigs[j].end());
        cand_rank.emplace(sigs[j], 0);
      }
      int r = 0;
      for (auto& [sig, rank] : cand_rank) rank = r++;
      for (std::size_t j = 0; j < masks.size(); ++j) cand_color[j] = cand_rank.at(sigs[j]);
    }
    // Item color = (old color, multiset of colors of candidates containing it).
    std::vector<std::vector<int>> item_sig(n);
    for (int i = 0; i < n; ++i) item_sig[i].push_back(c.item[i]);
    for (std::size_t j = 0; j < masks.size(); ++j) {
      for (int i : mask_items(masks[j])) item_sig[i].push_back(cand_color[j]);
    }
    std::map<std::vector<int>, int> item_rank;
    for (int i = 0; i < n; ++i) {
      auto& sig = item_sig[i];
      std::sort(sig.begin() + 1, sig.end());
      item_rank.emplace(sig, 0);
    }
    int r = 0;
    for (auto& [sig, rank] : item_rank) rank = r++;
    const int new_count = static_cast<int>(item_rank.size());
    for (int i = 0; i < n; ++i) c.item[i] = item_rank.at(item_sig[i]);
    if (new_count == c.count) break;  // stable partition
    c.count = new_count;
    if (c.count == n) break;  // discrete
  }
  return c;
}

Coloring refine_uniform(const CandidateFamily& family) {
  return refine(family, std::vector<int>(static_cast<std::size_t>(family.n()), 0), 1);
}

// Relabels items by (color, original index) and returns the sorted mask list.
// The result is always some relabeled copy of the family, so key equality can
// only identify genuinely relabel-equivalent families.
std::vector<Mask> relabeled_form(const CandidateFamily& family, const std::vector<int>& color) {
  const int n = family.n();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  std::vector<int> new_index(n);
  for (int pos = 0; pos < n; ++pos) new_index[order[pos]] = pos;
  std::vector<Mask> out;
  out.reserve(family.size());
  for (Mask m : family.masks()) {
    Mask relabeled = 0;
    for (int i : mask_items(m)) relabeled |= item_bit(new_index[i]);
    out.push_back(relabeled);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Individualization search when refinement alone does not separate all items.
// Branch choices are pruned with verified transpositions: two same-color items
// whose swap fixes the family lead to identical subtrees.
class CanonicalSearch {
 public:
  CanonicalSearch(const CandidateFamily& family, int leaf_cap)
      : family_(family), leaf_cap_(leaf_cap) {}

  std::vector<Mask> run(const Coloring& start) {
    descend(start);
    return std::move(best_);
  }

 private:
  void descend(const Coloring& c) {
    if (leaves_ >= leaf_cap_) return;
    if (c.count == family_.n()) {
      ++leaves_;
      auto form = relabeled_form(family_, c.item);
      if (best_.empty() || form < best_) best_ = std::move(form);
      return;
    }
    // Split the smallest non-singleton class; ties by lowest color.
    const int n = family_.n();
    std::vector<int> class_size(static_cast<std::size_t>(c.count), 0);
    for (int i = 0; i < n; ++i) ++class_size[c.item[i]];
    int target = -1;
    for (int col = 0; col < c.count; ++col) {
      if (class_size[col] < 2) continue;
      if (target == -1 || class_size[col] < class_size[target]) target = col;
    }
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if (c.item[i] == target) members.push_back(i);
    }
    // One representative per swap-verified orbit within the class.
    std::vector<int> reps;
    for (int i : members) {
      bool covered = false;
      for (int r : reps) {
        if (transposition_fixes(family_, r, i)) {
          covered = true;
          break;
        }
      }
      if (!covered) reps.push_back(i);
    }
    for (int r : reps) {
      std::vector<int> seed(c.item);
      for (int i = 0; i < n; ++i) seed[i] = 2 * seed[i] + 1;
      seed[r] -= 1;  // unique color below its former class
      descend(refine(family_, std::move(seed), c.count + 1));
      if (leaves_ >= leaf_cap_ && !best_.empty()) return;
    }
  }

  const CandidateFamily& family_;
  const int leaf_cap_;
  int leaves_ = 0;
  std::vector<Mask> best_;
};

CanonicalKey make_key(const CandidateFamily& family, const std::vector<Mask>& form) {
  CanonicalKey key;
  key.words.reserve(form.size() + 1);
  key.words.push_back((static_cast<std::uint64_t>(family.n()) << 32) |
                      static_cast<std::uint64_t>(family.d()));
  key.words.insert(key.words.end(), form.begin(), form.end());
  return key;
}

}  // namespace

bool transposition_fixes(const CandidateFamily& family, int i, int j) {
  const Mask pair = item_bit(i) | item_bit(j);
  for (Mask m : family.masks()) {
    const Mask hits = m & pair;
    if (hits == 0 || hits == pair) continue;  // fixed by the swap
    if (!family.contains(m ^ pair)) return false;
  }
  return true;
}

CanonicalKey canonical_key(const CandidateFamily& family) {
  if (family.empty()) return make_key(family, {});
  const Coloring c = refine_uniform(family);
  if (c.count == family.n()) {
    return make_key(family, relabeled_form(family, c.item));
  }
  CanonicalSearch search(family, /*leaf_cap=*/4096);
  return make_key(family, search.run(c));
}

CanonicalKey raw_key(const CandidateFamily& family) {
  CanonicalKey key;
  const auto masks = family.masks();
  key.words.reserve(masks.size() + 1);
  key.words.push_back((static_cast<std::uint64_t>(family.n()) << 32) |
                      static_cast<std::uint64_t>(family.d()));
  key.words.insert(key.words.end(), masks.begin(), masks.end());
  return key;
}

std::vector<std::vector<int>> symmetry_classes(const CandidateFamily& family) {
  const int n = family.n();
  const Coloring c = refine_uniform(family);
  std::vector<std::vector<int>> by_color(static_cast<std::size_t>(c.count));
  for (int i = 0; i < n; ++i) by_color[c.item[i]].push_back(i);

  std::vector<std::vector<int>> classes;
  for (const auto& members : by_color) {
    // Equal colors are necessary for a swap automorphism, never sufficient;
    // verify each candidate pair before merging.
    std::vector<std::size_t> rep_class;
    for (int i : members) {
      bool placed = false;
      for (std::size_t ci : rep_class) {
        if (transposition_fixes(family, classes[ci].front(), i)) {
          classes[ci].push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) {
        rep_class.push_back(classes.size());
        classes.push_back({i});
      }
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace grouptest
