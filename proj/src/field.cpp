#include "polyrel/field.hpp"

#include <string>

#include "polyrel/errors.hpp"

namespace polyrel {

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are sufficient for every n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field::Field(u64 p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) +
                            " is not a prime below 2^63");
  }
}

u64 Field::pow(u64 a, u64 e) const noexcept {
  u64 r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  return pow(a, p_ - 2);
}

u64 Field::from_signed(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<u64>(v) % p_;
  // -(v+1) avoids overflow on INT64_MIN.
  u64 m = static_cast<u64>(-(v + 1)) % p_;
  return sub(p_ - 1, m) % p_;
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) {
    throw ModulusMismatch("modulus mismatch: " + std::to_string(a.modulus()) +
                          " vs " + std::to_string(b.modulus()));
  }
}

}  // namespace polyrel
