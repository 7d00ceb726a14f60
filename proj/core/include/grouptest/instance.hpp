#pragma once

#include <string>

#include "grouptest/combinatorics.hpp"

namespace grouptest {

enum class PoolMode { fixed_k, unrestricted };

/// One identification problem: n items, exactly d of them defective, and the
/// pool-size regime (every pool has size exactly k, or pools of any size).
struct Instance {
  int n = 0;
  int d = 0;
  int k = 0;  // ignored in unrestricted mode
  PoolMode mode = PoolMode::fixed_k;

  static Instance fixed(int n, int d, int k);
  static Instance unrestricted(int n, int d);

  /// Enforces 1 <= n <= 64, 0 <= d <= n and, in fixed-k mode, 0 <= k <= n.
  void validate() const;

  [[nodiscard]] bool is_fixed() const noexcept { return mode == PoolMode::fixed_k; }

  /// "M^[2](2,6)" in fixed-k mode, "M(2,6)" in unrestricted mode.
  [[nodiscard]] std::string label() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace grouptest
