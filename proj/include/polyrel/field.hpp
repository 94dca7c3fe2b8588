#pragma once

#include <cstdint>

namespace polyrel {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Arithmetic in Z/pZ for a prime p < 2^63. Elements are canonical
/// representatives in [0, p).
class Field {
 public:
  constexpr Field() = default;

  /// Throws PreconditionError unless p is a prime below 2^63.
  explicit Field(u64 p);

  constexpr u64 modulus() const noexcept { return p_; }
  constexpr bool valid() const noexcept { return p_ != 0; }

  constexpr u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  constexpr u64 sub(u64 a, u64 b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  constexpr u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  constexpr u64 mul(u64 a, u64 b) const noexcept {
    if (p_ <= 0xffffffffULL) return a * b % p_;
    return static_cast<u64>(static_cast<u128>(a) * b % p_);
  }
  u64 pow(u64 a, u64 e) const noexcept;
  /// Throws PreconditionError on a == 0.
  u64 inv(u64 a) const;
  /// Reduces an arbitrary signed integer into [0, p).
  u64 from_signed(std::int64_t v) const noexcept;

  friend constexpr bool operator==(const Field&, const Field&) = default;

 private:
  u64 p_ = 0;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(u64 n) noexcept;

/// NTT-friendly prime 119 * 2^23 + 1; default modulus for generated data.
inline constexpr u64 kDefaultModulus = 998244353;

/// Throws ModulusMismatch if the fields differ.
void require_same_field(const Field& a, const Field& b);

}  // namespace polyrel
