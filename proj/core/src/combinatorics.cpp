#include "grouptest/combinatorics.hpp"

#include <algorithm>
#include <string>

namespace grouptest {

namespace {
// Families and pool lists are enumerated eagerly; anything past this is not a
// desk-scale instance and would only exhaust memory.
constexpr std::uint64_t kEnumerationCap = 1u << 22;
}  // namespace

std::uint64_t binomial(int n, int d) {
  if (n < 0 || n > kMaxItems || d < 0 || d > n) {
    throw std::invalid_argument("binomial: require 0 <= d <= n <= 64");
  }
  d = std::min(d, n - d);
  unsigned __int128 r = 1;
  for (int i = 1; i <= d; ++i) {
    r = r * static_cast<unsigned>(n - d + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Mask> combinations(int n, int d) {
  const std::uint64_t total = binomial(n, d);
  if (total > kEnumerationCap) {
    throw std::length_error("combinations: C(" + std::to_string(n) + "," + std::to_string(d) +
                            ") exceeds the enumeration cap");
  }
  std::vector<Mask> out;
  out.reserve(total);
  if (d == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks same-popcount masks in increasing numeric order.
  Mask m = full_mask(d);
  const Mask limit = full_mask(n);
  while (m <= limit) {
    out.push_back(m);
    if (m == 0) break;
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    if (r > limit || r < m) break;  // overflow guard for n = 64
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<Mask> combinations_lex(int n, int k) {
  const std::uint64_t total = binomial(n, k);
  if (total > kEnumerationCap) {
    throw std::length_error("combinations_lex: count exceeds the enumeration cap");
  }
  std::vector<Mask> out;
  out.reserve(total);
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= item_bit(i);
    out.push_back(m);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<int> mask_items(Mask m) {
  std::vector<int> items;
  items.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    const int i = lowest_item(m);
    items.push_back(i);
    m &= m - 1;
  }
  return items;
}

}  // namespace grouptest
