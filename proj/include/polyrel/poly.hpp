#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "polyrel/degree.hpp"
#include "polyrel/field.hpp"

namespace polyrel {

/// Dense univariate polynomial over a prime field. Coefficients are stored
/// low-to-high and always normalized: no trailing zero, the zero
/// polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : field_(f) {}
  /// Coefficients must already lie in [0, p).
  Poly(Field f, std::vector<u64> coeffs);
  Poly(Field f, std::initializer_list<u64> coeffs)
      : Poly(f, std::vector<u64>(coeffs)) {}

  static Poly constant(Field f, u64 c);
  static Poly monomial(Field f, u64 c, std::size_t k);
  /// Signed coefficients, reduced into the field.
  static Poly from_signed(Field f, std::initializer_list<std::int64_t> coeffs);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Degree degree() const noexcept {
    return c_.empty() ? Degree::neg_inf()
                      : Degree(static_cast<std::int64_t>(c_.size()) - 1);
  }
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const noexcept { return c_.size(); }
  u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  u64 leading_coeff() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const u64> coeffs() const noexcept { return c_; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  void set_coeff(std::size_t i, u64 v);

  /// Coefficients of index < t.
  Poly truncate(std::size_t t) const;
  /// Coefficients in [lo, hi), shifted down by lo.
  Poly slice(std::size_t lo, std::size_t hi) const;
  /// Multiply by x^k.
  Poly shift_up(std::size_t k) const;
  Poly scaled(u64 c) const;
  Poly monic() const;
  u64 evaluate(u64 point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.field_ == b.field_);
  }

 private:
  void normalize();

  Field field_;
  std::vector<u64> c_;
};

Poly poly_mul(const Poly& a, const Poly& b);

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);

/// Power series inverse modulo x^t; requires a(0) != 0 and t >= 1.
Poly series_inverse(const Poly& a, std::size_t t);

/// x^d * a(1/x); requires deg a <= d.
Poly poly_reverse(const Poly& a, std::int64_t d);

struct ExtendedGcd {
  Poly g;  // monic, or zero when both inputs are zero
  Poly u;
  Poly v;  // u*a + v*b = g
};
ExtendedGcd poly_xgcd(const Poly& a, const Poly& b);

namespace detail {
/// Coefficient-vector product with the library's multiplication strategy.
std::vector<u64> multiply(const Field& f, std::span<const u64> a,
                          std::span<const u64> b);
std::vector<u64> multiply_schoolbook(const Field& f, std::span<const u64> a,
                                     std::span<const u64> b);
bool ntt_supported(const Field& f, std::size_t result_size);
/// In-place forward/inverse NTT modulo 998244353; size is a power of two.
void ntt(std::vector<u64>& a, bool inverse);
}  // namespace detail

}  // namespace polyrel
