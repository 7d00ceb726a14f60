#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace grouptest {

/// A worst-case test count: either a finite nonnegative integer or infinity
/// (the instance is unsolvable). Finite values compare numerically and every
/// finite value is less than infinity.
class Value {
 public:
  constexpr Value() = default;

  static constexpr Value finite(std::uint64_t count) {
    if (count == kInfiniteRaw) throw std::overflow_error("Value::finite: count out of range");
    return Value(count);
  }
  static constexpr Value infinite() { return Value(kInfiniteRaw); }

  [[nodiscard]] constexpr bool is_finite() const noexcept { return raw_ != kInfiniteRaw; }
  [[nodiscard]] constexpr bool is_infinite() const noexcept { return raw_ == kInfiniteRaw; }

  /// Finite count; throws if called on infinity.
  [[nodiscard]] constexpr std::uint64_t count() const {
    if (is_infinite()) throw std::domain_error("Value::count called on infinity");
    return raw_;
  }

  /// Adds a finite number of tests; infinity absorbs.
  [[nodiscard]] constexpr Value plus(std::uint64_t extra) const {
    return is_infinite() ? *this : finite(raw_ + extra);
  }

  friend constexpr auto operator<=>(const Value&, const Value&) = default;

  [[nodiscard]] std::string str() const {
    return is_infinite() ? std::string("inf") : std::to_string(raw_);
  }

 private:
  static constexpr std::uint64_t kInfiniteRaw = std::numeric_limits<std::uint64_t>::max();
  constexpr explicit Value(std::uint64_t raw) : raw_(raw) {}
  std::uint64_t raw_ = 0;
};

}  // namespace grouptest
