#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grouptest/combinatorics.hpp"
#include "grouptest/instance.hpp"

namespace grouptest {

/// Binary test result. A pool is contaminated when it contains at least one
/// defective item, pure otherwise.
enum class Outcome : std::uint8_t { contaminated, pure };

[[nodiscard]] constexpr const char* outcome_name(Outcome o) noexcept {
  return o == Outcome::contaminated ? "contaminated" : "pure";
}

/// The subset of items submitted to one test.
struct Pool {
  Mask members = 0;

  [[nodiscard]] int size() const noexcept { return popcount(members); }
  [[nodiscard]] bool contains(int item) const noexcept { return (members >> item) & 1; }

  friend constexpr auto operator<=>(const Pool&, const Pool&) = default;

  /// "{0,1}" style rendering, items ascending.
  [[nodiscard]] std::string str() const;
};

/// Outcome of testing `pool` when `defectives` is the true defective set.
/// Throws std::out_of_range when either set uses an item index >= n.
[[nodiscard]] Outcome pool_outcome(const Pool& pool, Mask defectives, int n);

/// The set of d-subsets still consistent with every observed outcome.
/// Members are stored as a sorted, deduplicated list of bitmasks; that order
/// is the canonical iteration order everywhere.
class CandidateFamily {
 public:
  CandidateFamily() = default;

  /// All C(n, d) d-subsets of [0, n).
  static CandidateFamily initial(int n, int d);

  /// Sorts, deduplicates and validates the given candidate masks.
  static CandidateFamily from_masks(int n, int d, std::vector<Mask> masks);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
  [[nodiscard]] bool empty() const noexcept { return masks_.empty(); }
  [[nodiscard]] std::span<const Mask> masks() const noexcept { return masks_; }
  [[nodiscard]] bool contains(Mask candidate) const;

  /// Exactly one candidate left.
  [[nodiscard]] bool solved() const noexcept { return masks_.size() == 1; }

  /// The single remaining candidate; requires solved().
  [[nodiscard]] Mask sole() const;

  /// Items that appear in at least one candidate.
  [[nodiscard]] Mask live_mask() const noexcept;

  /// Items that appear in every candidate (known defective).
  [[nodiscard]] Mask confirmed_mask() const noexcept;

  /// Candidates consistent with observing `outcome` on `pool`. May be empty;
  /// an empty result signals an inconsistent outcome sequence at the caller.
  [[nodiscard]] CandidateFamily filtered(const Pool& pool, Outcome outcome) const;

  /// True iff both outcomes of `pool` are consistent with some candidate.
  [[nodiscard]] bool informative(const Pool& pool) const;

  friend bool operator==(const CandidateFamily&, const CandidateFamily&) = default;

 private:
  CandidateFamily(int n, int d, std::vector<Mask> masks)
      : n_(n), d_(d), masks_(std::move(masks)) {}

  int n_ = 0;
  int d_ = 0;
  std::vector<Mask> masks_;
};

[[nodiscard]] inline CandidateFamily initial_family(int n, int d) {
  return CandidateFamily::initial(n, d);
}

[[nodiscard]] inline CandidateFamily filter_family(const CandidateFamily& family, const Pool& pool,
                                                   Outcome outcome) {
  return family.filtered(pool, outcome);
}

[[nodiscard]] inline bool is_informative(const CandidateFamily& family, const Pool& pool) {
  return family.informative(pool);
}

/// True iff the family is a singleton. Throws std::invalid_argument on an
/// empty family (no consistent candidate left means a caller bug).
[[nodiscard]] bool is_solved(const CandidateFamily& family);

}  // namespace grouptest
