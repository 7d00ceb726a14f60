#include "grouptest/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace grouptest {

std::string Pool::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : mask_items(members)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

Outcome pool_outcome(const Pool& pool, Mask defectives, int n) {
  const Mask range = full_mask(n);
  if ((pool.members & ~range) != 0) {
    throw std::out_of_range("pool_outcome: pool contains an item index >= n");
  }
  if ((defectives & ~range) != 0) {
    throw std::out_of_range("pool_outcome: defective set contains an item index >= n");
  }
  return (pool.members & defectives) != 0 ? Outcome::contaminated : Outcome::pure;
}

CandidateFamily CandidateFamily::initial(int n, int d) {
  Instance{n, d, 0, PoolMode::unrestricted}.validate();
  return CandidateFamily(n, d, combinations(n, d));
}

CandidateFamily CandidateFamily::from_masks(int n, int d, std::vector<Mask> masks) {
  Instance{n, d, 0, PoolMode::unrestricted}.validate();
  const Mask range = full_mask(n);
  for (Mask m : masks) {
    if ((m & ~range) != 0) {
      throw std::out_of_range("CandidateFamily: candidate uses an item index >= n");
    }
    if (popcount(m) != d) {
      throw std::invalid_argument("CandidateFamily: candidate size differs from d");
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return CandidateFamily(n, d, std::move(masks));
}

bool CandidateFamily::contains(Mask candidate) const {
  return std::binary_search(masks_.begin(), masks_.end(), candidate);
}

Mask CandidateFamily::sole() const {
  if (!solved()) throw std::logic_error("CandidateFamily::sole: family is not a singleton");
  return masks_.front();
}

Mask CandidateFamily::live_mask() const noexcept {
  Mask live = 0;
  for (Mask m : masks_) live |= m;
  return live;
}

Mask CandidateFamily::confirmed_mask() const noexcept {
  if (masks_.empty()) return 0;
  Mask confirmed = ~Mask{0};
  for (Mask m : masks_) confirmed &= m;
  return confirmed;
}

CandidateFamily CandidateFamily::filtered(const Pool& pool, Outcome outcome) const {
  if ((pool.members & ~full_mask(n_)) != 0) {
    throw std::out_of_range("filter_family: pool contains an item index >= n");
  }
  std::vector<Mask> kept;
  kept.reserve(masks_.size());
  const bool want_hit = outcome == Outcome::contaminated;
  for (Mask m : masks_) {
    if (((m & pool.members) != 0) == want_hit) kept.push_back(m);
  }
  return CandidateFamily(n_, d_, std::move(kept));  // stays sorted
}

bool CandidateFamily::informative(const Pool& pool) const {
  if ((pool.members & ~full_mask(n_)) != 0) {
    throw std::out_of_range("is_informative: pool contains an item index >= n");
  }
  bool any_hit = false;
  bool any_miss = false;
  for (Mask m : masks_) {
    ((m & pool.members) != 0 ? any_hit : any_miss) = true;
    if (any_hit && any_miss) return true;
  }
  return false;
}

bool is_solved(const CandidateFamily& family) {
  if (family.empty()) {
    throw std::invalid_argument("is_solved: empty family (inconsistent outcome sequence)");
  }
  return family.solved();
}

}  // namespace grouptest
