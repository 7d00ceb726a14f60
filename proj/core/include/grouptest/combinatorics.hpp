#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace grouptest {

/// Item sets are bitmasks over at most 64 items.
using Mask = std::uint64_t;

inline constexpr int kMaxItems = 64;

[[nodiscard]] constexpr int popcount(Mask m) noexcept { return std::popcount(m); }
[[nodiscard]] constexpr Mask item_bit(int i) noexcept { return Mask{1} << i; }

/// Mask with the n lowest bits set.
[[nodiscard]] constexpr Mask full_mask(int n) noexcept {
  return n >= kMaxItems ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Lowest set bit index; undefined for 0.
[[nodiscard]] constexpr int lowest_item(Mask m) noexcept { return std::countr_zero(m); }

/// ceil(log2(x)) for x >= 1, integer arithmetic only.
[[nodiscard]] constexpr int ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::domain_error("ceil_log2: argument must be positive");
  return x == 1 ? 0 : static_cast<int>(std::bit_width(x - 1));
}

[[nodiscard]] constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw std::domain_error("ceil_div: division by zero");
  return (a + b - 1) / b;
}

/// C(n, d), exact. Requires 0 <= d <= n <= 64; every such value fits in 64 bits.
[[nodiscard]] std::uint64_t binomial(int n, int d);

/// All d-subsets of [0, n) as bitmasks in increasing numeric order.
/// Throws std::length_error when C(n, d) exceeds the desk-scale cap.
[[nodiscard]] std::vector<Mask> combinations(int n, int d);

/// All k-subsets of [0, n) in lexicographic order of the sorted index tuples,
/// e.g. {0,1}, {0,2}, ..., {0,n-1}, {1,2}, ...
[[nodiscard]] std::vector<Mask> combinations_lex(int n, int k);

/// Item indices of a mask in increasing order.
[[nodiscard]] std::vector<int> mask_items(Mask m);

}  // namespace grouptest
