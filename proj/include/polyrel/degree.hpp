#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace polyrel {

/// Polynomial degree with an explicit -infinity for the zero polynomial.
/// Ordering puts -infinity below every finite degree.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(std::int64_t v) : finite_(true), value_(v) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const noexcept { return !finite_; }
  constexpr bool is_finite() const noexcept { return finite_; }
  /// Value of a finite degree; -infinity maps to `fallback`.
  constexpr std::int64_t value_or(std::int64_t fallback) const noexcept {
    return finite_ ? value_ : fallback;
  }
  /// Throws InternalError on -infinity.
  std::int64_t value() const;

  /// -infinity is absorbing.
  constexpr Degree operator+(std::int64_t shift) const noexcept {
    return finite_ ? Degree(value_ + shift) : Degree();
  }
  constexpr Degree operator-(std::int64_t shift) const noexcept {
    return finite_ ? Degree(value_ - shift) : Degree();
  }

  constexpr std::strong_ordering operator<=>(const Degree& o) const noexcept {
    if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const Degree& o) const noexcept {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }

  constexpr std::strong_ordering operator<=>(std::int64_t v) const noexcept {
    return *this <=> Degree(v);
  }
  constexpr bool operator==(std::int64_t v) const noexcept {
    return *this == Degree(v);
  }

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

/// Column degrees, row degrees, minimal degrees, orders.
using DegreeTuple = std::vector<Degree>;
/// Integer column weights.
using Shift = std::vector<std::int64_t>;

DegreeTuple to_degrees(const std::vector<std::int64_t>& values);
/// Finite values; -infinity entries become `fallback`.
std::vector<std::int64_t> values_or(const DegreeTuple& d, std::int64_t fallback);

/// Componentwise a < b (every entry).
bool all_less(const DegreeTuple& a, const DegreeTuple& b);

Shift uniform_shift(std::size_t n, std::int64_t value);
Shift add_shift(const Shift& s, const std::vector<std::int64_t>& d);

}  // namespace polyrel
