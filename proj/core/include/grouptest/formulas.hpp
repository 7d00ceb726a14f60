#pragma once

#include <optional>

#include "grouptest/value.hpp"

namespace grouptest {

enum class FormulaStatus { exact, lower_bound, upper_bound, conjecture, unsolvable, out_of_domain };

[[nodiscard]] const char* formula_status_name(FormulaStatus s) noexcept;

/// A closed-form claim about M^[k](d, n): the claimed number and how strong
/// the claim is. out_of_domain carries no value.
struct FormulaResult {
  FormulaStatus status = FormulaStatus::out_of_domain;
  std::optional<Value> value{};

  static FormulaResult exact(Value v) { return {FormulaStatus::exact, v}; }
  static FormulaResult lower_bound(Value v) { return {FormulaStatus::lower_bound, v}; }
  static FormulaResult upper_bound(Value v) { return {FormulaStatus::upper_bound, v}; }
  static FormulaResult conjecture(Value v) { return {FormulaStatus::conjecture, v}; }
  static FormulaResult unsolvable() { return {FormulaStatus::unsolvable, Value::infinite()}; }
  static FormulaResult out_of_domain() { return {FormulaStatus::out_of_domain, std::nullopt}; }

  friend bool operator==(const FormulaResult&, const FormulaResult&) = default;
};

/// M(1, n) = ceil(log2 n). Requires n >= 1.
[[nodiscard]] Value m_d1_unrestricted(int n);

/// ceil(n/k) - 2 + ceil(log2(n - (ceil(n/k) - 2) * k)): the d = 1 fixed-k
/// lower bound. Requires 0 < k < n.
[[nodiscard]] int thm1_lower_bound(int n, int k);

/// The sufficiency condition under which the d = 1 bound is claimed tight:
/// n >= 2k - 2^(ceil(log2 k) - 1) and n >= k + 2^(ceil(log2 k) - 2), each
/// part applying only when its exponent is nonnegative. Requires 0 < k < n.
[[nodiscard]] bool thm1_condition(int n, int k);

/// M^[k](1, n): exact when thm1_condition holds, otherwise the same number as
/// a lower bound only. Requires 0 < k < n.
[[nodiscard]] FormulaResult m_d1_fixed_k(int n, int k);

/// M^[2](2, n): infinity at n = 3, C(4,2)-1 = 5 at n = 4, floor(n/2) + 2 for
/// n >= 5. Requires n >= 3.
[[nodiscard]] FormulaResult m_d2_k2(int n);

/// Upper bound ceil(n/2) + 2d - 3 on M^[2](d, n) for 3 <= d <= floor(n/2)-1;
/// out_of_domain elsewhere.
[[nodiscard]] FormulaResult thm3_upper_bound(int n, int d);

/// The conjectured exact value ceil(n/2) + 2d - 3. Requires the same domain
/// as thm3_upper_bound; throws std::domain_error outside it.
[[nodiscard]] FormulaResult conjecture1_value(int n, int d);

/// True iff k > n - d, in which case every pool is contaminated and the
/// instance is unsolvable.
[[nodiscard]] bool prop6_unsolvable(int n, int d, int k);

/// M^[n-d](d, n) = C(n, d) - 1. Requires 0 < d < n.
[[nodiscard]] Value prop7_value(int n, int d);

/// d in {0, n}: exact 0 (nothing to learn). k = 1 with 0 < d < n: exact n - 1
/// (individual testing). Everything else: out_of_domain.
[[nodiscard]] FormulaResult trivial_values(int n, int d, int k);

}  // namespace grouptest
