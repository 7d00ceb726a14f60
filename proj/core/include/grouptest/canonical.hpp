#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grouptest/family.hpp"

namespace grouptest {

/// Opaque relabeling-invariant key for a candidate family. Equal keys imply
/// the two families are identical up to an item relabeling; distinct keys for
/// equivalent families are possible only on families the signature refinement
/// cannot separate within the search cap (a memoization miss, never an error).
struct CanonicalKey {
  std::vector<std::uint64_t> words;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : key.words) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

[[nodiscard]] CanonicalKey canonical_key(const CandidateFamily& family);

/// Key built from the raw sorted mask list, no relabeling. Used when
/// canonicalization is disabled.
[[nodiscard]] CanonicalKey raw_key(const CandidateFamily& family);

/// Groups of items interchangeable under verified family automorphisms: for
/// any two items of a group, swapping them maps the family onto itself.
/// Groups are returned with item indices ascending, ordered by first item.
[[nodiscard]] std::vector<std::vector<int>> symmetry_classes(const CandidateFamily& family);

/// True iff swapping items i and j maps the family onto itself.
[[nodiscard]] bool transposition_fixes(const CandidateFamily& family, int i, int j);

}  // namespace grouptest
