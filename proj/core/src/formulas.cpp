#include "grouptest/formulas.hpp"

#include <stdexcept>
#include <string>

#include "grouptest/combinatorics.hpp"

namespace grouptest {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

const char* formula_status_name(FormulaStatus s) noexcept {
  switch (s) {
    case FormulaStatus::exact: return "exact";
    case FormulaStatus::lower_bound: return "lower-bound";
    case FormulaStatus::upper_bound: return "upper-bound";
    case FormulaStatus::conjecture: return "conjecture";
    case FormulaStatus::unsolvable: return "unsolvable";
    case FormulaStatus::out_of_domain: return "out-of-domain";
  }
  return "?";
}

Value m_d1_unrestricted(int n) {
  require(n >= 1, "m_d1_unrestricted: n must be >= 1");
  return Value::finite(static_cast<std::uint64_t>(ceil_log2(static_cast<std::uint64_t>(n))));
}

int thm1_lower_bound(int n, int k) {
  require(0 < k && k < n, "thm1_lower_bound: requires 0 < k < n");
  const int phase = static_cast<int>(ceil_div(static_cast<std::uint64_t>(n),
                                              static_cast<std::uint64_t>(k))) -
                    2;
  const int residue = n - phase * k;
  return phase + ceil_log2(static_cast<std::uint64_t>(residue));
}

bool thm1_condition(int n, int k) {
  require(0 < k && k < n, "thm1_condition: requires 0 < k < n");
  const int cl = ceil_log2(static_cast<std::uint64_t>(k));
  // Each term guards one padding stage; stages with a negative exponent do
  // not occur, so their terms impose nothing.
  if (cl >= 1 && n < 2 * k - (1 << (cl - 1))) return false;
  if (cl >= 2 && n < k + (1 << (cl - 2))) return false;
  return true;
}

FormulaResult m_d1_fixed_k(int n, int k) {
  const int bound = thm1_lower_bound(n, k);
  const Value v = Value::finite(static_cast<std::uint64_t>(bound));
  return thm1_condition(n, k) ? FormulaResult::exact(v) : FormulaResult::lower_bound(v);
}

FormulaResult m_d2_k2(int n) {
  require(n >= 3, "m_d2_k2: requires n >= 3");
  if (n == 3) return FormulaResult::unsolvable();
  if (n == 4) return FormulaResult::exact(Value::finite(5));
  return FormulaResult::exact(Value::finite(static_cast<std::uint64_t>(n / 2 + 2)));
}

namespace {
bool thm3_in_domain(int n, int d) { return 3 <= d && d <= n / 2 - 1; }
}  // namespace

FormulaResult thm3_upper_bound(int n, int d) {
  if (!thm3_in_domain(n, d)) return FormulaResult::out_of_domain();
  const int bound = static_cast<int>(ceil_div(static_cast<std::uint64_t>(n), 2)) + 2 * d - 3;
  return FormulaResult::upper_bound(Value::finite(static_cast<std::uint64_t>(bound)));
}

FormulaResult conjecture1_value(int n, int d) {
  require(thm3_in_domain(n, d), "conjecture1_value: requires 3 <= d <= floor(n/2) - 1");
  return FormulaResult::conjecture(*thm3_upper_bound(n, d).value);
}

bool prop6_unsolvable(int n, int d, int k) { return k > n - d; }

Value prop7_value(int n, int d) {
  require(0 < d && d < n, "prop7_value: requires 0 < d < n");
  return Value::finite(binomial(n, d) - 1);
}

FormulaResult trivial_values(int n, int d, int k) {
  if (d == 0 || d == n) return FormulaResult::exact(Value::finite(0));
  if (k == 1 && 0 < d && d < n) {
    return FormulaResult::exact(Value::finite(static_cast<std::uint64_t>(n - 1)));
  }
  return FormulaResult::out_of_domain();
}

}  // namespace grouptest
