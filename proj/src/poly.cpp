#include "polyrel/poly.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "polyrel/errors.hpp"

namespace polyrel {

std::int64_t Degree::value() const {
  if (!finite_) throw InternalError("value of degree -infinity requested");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Degree& d) {
  if (d.is_neg_inf()) return os << "-inf";
  return os << d.value_or(0);
}

DegreeTuple to_degrees(const std::vector<std::int64_t>& values) {
  DegreeTuple out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v);
  return out;
}

std::vector<std::int64_t> values_or(const DegreeTuple& d,
                                    std::int64_t fallback) {
  std::vector<std::int64_t> out;
  out.reserve(d.size());
  for (const auto& x : d) out.push_back(x.value_or(fallback));
  return out;
}

bool all_less(const DegreeTuple& a, const DegreeTuple& b) {
  if (a.size() != b.size()) throw ShapeError("degree tuple length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] < b[i])) return false;
  }
  return true;
}

Shift uniform_shift(std::size_t n, std::int64_t value) {
  return Shift(n, value);
}

Shift add_shift(const Shift& s, const std::vector<std::int64_t>& d) {
  if (s.size() != d.size()) throw ShapeError("shift length mismatch");
  Shift out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] + d[i];
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

namespace {

constexpr u64 kNttPrime = 998244353;
constexpr u64 kNttRoot = 3;
constexpr std::size_t kNttMaxLog = 23;
constexpr std::size_t kSchoolbookThreshold = 32;

u64 ntt_pow(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = r * a % kNttPrime;
    a = a * a % kNttPrime;
    e >>= 1;
  }
  return r;
}

void add_into(const Field& f, std::vector<u64>& acc, std::size_t offset,
              const std::vector<u64>& src) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    acc[offset + i] = f.add(acc[offset + i], src[i]);
  }
}

// Both operands have length n (zero padded). Result has length 2n - 1.
std::vector<u64> karatsuba(const Field& f, std::span<const u64> a,
                           std::span<const u64> b) {
  const std::size_t n = a.size();
  if (n <= kSchoolbookThreshold) return multiply_schoolbook(f, a, b);
  const std::size_t h = n / 2;
  auto a0 = a.subspan(0, h), a1 = a.subspan(h);
  auto b0 = b.subspan(0, h), b1 = b.subspan(h);
  const std::size_t hi = n - h;  // >= h
  std::vector<u64> as(hi), bs(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    as[i] = f.add(i < h ? a0[i] : 0, a1[i]);
    bs[i] = f.add(i < h ? b0[i] : 0, b1[i]);
  }
  std::vector<u64> lo = karatsuba(f, a0, b0);
  std::vector<u64> top = karatsuba(f, a1, b1);
  std::vector<u64> mid = karatsuba(f, as, bs);
  for (std::size_t i = 0; i < lo.size(); ++i) mid[i] = f.sub(mid[i], lo[i]);
  for (std::size_t i = 0; i < top.size(); ++i) mid[i] = f.sub(mid[i], top[i]);
  std::vector<u64> out(2 * n - 1, 0);
  add_into(f, out, 0, lo);
  add_into(f, out, h, mid);
  add_into(f, out, 2 * h, top);
  return out;
}

std::vector<u64> multiply_karatsuba(const Field& f, std::span<const u64> a,
                                    std::span<const u64> b) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = b.size();
  std::vector<u64> out(a.size() + b.size() - 1, 0);
  std::vector<u64> chunk(n);
  // Split the longer operand into pieces of the shorter length.
  for (std::size_t off = 0; off < a.size(); off += n) {
    std::size_t len = std::min(n, a.size() - off);
    std::fill(chunk.begin(), chunk.end(), 0);
    std::copy_n(a.begin() + static_cast<std::ptrdiff_t>(off), len,
                chunk.begin());
    std::vector<u64> prod = karatsuba(f, chunk, b);
    std::size_t keep = std::min(prod.size(), out.size() - off);
    for (std::size_t i = 0; i < keep; ++i) {
      out[off + i] = f.add(out[off + i], prod[i]);
    }
  }
  return out;
}

std::vector<u64> multiply_ntt(std::span<const u64> a, std::span<const u64> b) {
  const std::size_t need = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < need) n <<= 1;
  std::vector<u64> fa(n, 0), fb(n, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = fa[i] * fb[i] % kNttPrime;
  ntt(fa, true);
  fa.resize(need);
  return fa;
}

}  // namespace

bool ntt_supported(const Field& f, std::size_t result_size) {
  return f.modulus() == kNttPrime && result_size <= (std::size_t{1} << kNttMaxLog);
}

namespace {

// Multiplication by a fixed w through its precomputed quotient
// floor(w 2^64 / p): the result is w x mod p up to one extra p.
inline u64 shoup_quotient(u64 w) {
  return static_cast<u64>((static_cast<u128>(w) << 64) / kNttPrime);
}
inline u64 mul_shoup(u64 x, u64 w, u64 wq) {
  const u64 q = static_cast<u64>((static_cast<u128>(wq) * x) >> 64);
  const u64 r = w * x - q * kNttPrime;
  return r >= kNttPrime ? r - kNttPrime : r;
}

// roots[half + k] = w_len^k for the primitive len-th root w_len, len = 2 half,
// with their Shoup quotients; likewise for the inverse roots. Grown on
// demand, per thread.
struct RootTables {
  std::vector<u64> roots{0, 1}, roots_q{0, shoup_quotient(1)};
  std::vector<u64> inverse_roots{0, 1}, inverse_roots_q{0, shoup_quotient(1)};

  void reserve(std::size_t n) {
    for (std::size_t len = roots.size() * 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      const u64 w = ntt_pow(kNttRoot, (kNttPrime - 1) / len);
      const u64 wi = ntt_pow(w, kNttPrime - 2);
      for (auto* v : {&roots, &roots_q, &inverse_roots, &inverse_roots_q}) v->resize(len);
      roots[half] = inverse_roots[half] = 1;
      for (std::size_t k = 1; k < half; ++k) {
        roots[half + k] = roots[half + k - 1] * w % kNttPrime;
        inverse_roots[half + k] = inverse_roots[half + k - 1] * wi % kNttPrime;
      }
      for (std::size_t k = 0; k < half; ++k) {
        roots_q[half + k] = shoup_quotient(roots[half + k]);
        inverse_roots_q[half + k] = shoup_quotient(inverse_roots[half + k]);
      }
    }
  }
};

}  // namespace

void ntt(std::vector<u64>& a, bool inverse) {
  const std::size_t n = a.size();
  thread_local RootTables tables;
  tables.reserve(n);
  const u64* ws = inverse ? tables.inverse_roots.data() : tables.roots.data();
  const u64* wq = inverse ? tables.inverse_roots_q.data() : tables.roots_q.data();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t half = 1; half < n; half <<= 1) {
    const u64* w = ws + half;
    const u64* q = wq + half;
    for (std::size_t i = 0; i < n; i += 2 * half) {
      u64* lo = a.data() + i;
      u64* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const u64 u = lo[k];
        const u64 v = mul_shoup(hi[k], w[k], q[k]);
        lo[k] = u + v >= kNttPrime ? u + v - kNttPrime : u + v;
        hi[k] = u >= v ? u - v : u + kNttPrime - v;
      }
    }
  }
  if (inverse) {
    const u64 inv_n = ntt_pow(static_cast<u64>(n % kNttPrime), kNttPrime - 2);
    const u64 inv_q = shoup_quotient(inv_n);
    for (auto& x : a) x = mul_shoup(x, inv_n, inv_q);
  }
}

std::vector<u64> multiply_schoolbook(const Field& f, std::span<const u64> a,
                                     std::span<const u64> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t need = a.size() + b.size() - 1;
  std::vector<u64> out(need, 0);
  if (f.modulus() <= 0xffffffffULL) {
    // Products fit in 64 bits; accumulate in 128 bits and reduce once.
    std::vector<u128> acc(need, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        acc[i + j] += static_cast<u128>(a[i] * b[j]);
      }
    }
    const u64 p = f.modulus();
    const u64 base = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    for (std::size_t k = 0; k < need; ++k) {
      const u64 hi = static_cast<u64>(acc[k] >> 64) % p;
      const u64 lo = static_cast<u64>(acc[k]) % p;
      out[k] = (hi * base % p + lo) % p;
    }
    return out;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return out;
}

std::vector<u64> multiply(const Field& f, std::span<const u64> a,
                          std::span<const u64> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t small = std::min(a.size(), b.size());
  if (small <= kSchoolbookThreshold) return multiply_schoolbook(f, a, b);
  const std::size_t need = a.size() + b.size() - 1;
  if (ntt_supported(f, need)) return multiply_ntt(a, b);
  return multiply_karatsuba(f, a, b);
}

}  // namespace detail

// ---------------------------------------------------------------------------

Poly::Poly(Field f, std::vector<u64> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (auto c : c_) {
    if (c >= f.modulus()) {
      throw PreconditionError("coefficient " + std::to_string(c) +
                              " not reduced modulo " +
                              std::to_string(f.modulus()));
    }
  }
  normalize();
}

Poly Poly::constant(Field f, u64 c) { return Poly(f, {c % f.modulus()}); }

Poly Poly::monomial(Field f, u64 c, std::size_t k) {
  Poly p(f);
  c %= f.modulus();
  if (c == 0) return p;
  p.c_.assign(k + 1, 0);
  p.c_[k] = c;
  return p;
}

Poly Poly::from_signed(Field f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<u64> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(f.from_signed(v));
  return Poly(f, std::move(c));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::set_coeff(std::size_t i, u64 v) {
  v %= field_.modulus();
  if (i >= c_.size()) {
    if (v == 0) return;
    c_.resize(i + 1, 0);
  }
  c_[i] = v;
  normalize();
}

Poly Poly::truncate(std::size_t t) const {
  if (t >= c_.size()) return *this;
  Poly r(field_);
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(t));
  r.normalize();
  return r;
}

Poly Poly::slice(std::size_t lo, std::size_t hi) const {
  Poly r(field_);
  if (lo >= c_.size() || lo >= hi) return r;
  hi = std::min(hi, c_.size());
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(lo),
              c_.begin() + static_cast<std::ptrdiff_t>(hi));
  r.normalize();
  return r;
}

Poly Poly::shift_up(std::size_t k) const {
  if (c_.empty() || k == 0) return *this;
  Poly r(field_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::scaled(u64 c) const {
  c %= field_.modulus();
  if (c == 0) return Poly(field_);
  Poly r = *this;
  for (auto& x : r.c_) x = field_.mul(x, c);
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

u64 Poly::evaluate(u64 point) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, point), *it);
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = o;
    return *this;
  }
  require_same_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = -o;
    return *this;
  }
  require_same_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = field_.neg(x);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.field().valid() && b.field().valid()) {
      require_same_field(a.field(), b.field());
    }
    return Poly(a.field().valid() ? a.field() : b.field());
  }
  require_same_field(a.field(), b.field());
  return Poly(a.field(), detail::multiply(a.field(), a.coeffs(), b.coeffs()));
}

namespace {

std::pair<Poly, Poly> divrem_schoolbook(const Poly& a, const Poly& b) {
  const Field& f = b.field();
  std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.size() - 1;
  const std::size_t dq = a.size() - 1 - db;
  std::vector<u64> q(dq + 1, 0);
  const u64 inv_lead = f.inv(b.leading_coeff());
  auto bc = b.coeffs();
  for (std::size_t k = dq + 1; k-- > 0;) {
    u64 c = f.mul(r[k + db], inv_lead);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      r[k + i] = f.sub(r[k + i], f.mul(c, bc[i]));
    }
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

}  // namespace

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.field().valid() && !a.is_zero()) require_same_field(a.field(), b.field());
  const Field& f = b.field();
  if (a.size() < b.size()) return {Poly(f), a.is_zero() ? Poly(f) : a};
  const std::size_t db = b.size() - 1;
  const std::size_t dq = a.size() - 1 - db;
  if (db < 64 || dq < 64) return divrem_schoolbook(a, b);
  // Reversed quotient via a power series inverse.
  const auto da = static_cast<std::int64_t>(a.size() - 1);
  Poly ra = poly_reverse(a, da).truncate(dq + 1);
  Poly rb = poly_reverse(b, static_cast<std::int64_t>(db)).truncate(dq + 1);
  Poly rq = (ra * series_inverse(rb, dq + 1)).truncate(dq + 1);
  Poly q = poly_reverse(rq, static_cast<std::int64_t>(dq));
  Poly r = (a - q * b).truncate(db);
  return {std::move(q), std::move(r)};
}

Poly poly_rem(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }

Poly series_inverse(const Poly& a, std::size_t t) {
  if (t == 0) throw PreconditionError("series inverse order must be >= 1");
  if (a.coeff(0) == 0) {
    throw PreconditionError("series inverse requires a nonzero constant term");
  }
  const Field& f = a.field();
  Poly g = Poly::constant(f, f.inv(a.coeff(0)));
  std::size_t prec = 1;
  const Poly two = Poly::constant(f, 2);
  while (prec < t) {
    prec = std::min(2 * prec, t);
    Poly e = (a.truncate(prec) * g).truncate(prec);
    g = (g * (two - e)).truncate(prec);
  }
  return g;
}

Poly poly_reverse(const Poly& a, std::int64_t d) {
  if (a.degree() > d) {
    throw PreconditionError("reversal bound smaller than the degree");
  }
  if (a.is_zero()) return a;
  std::vector<u64> c(static_cast<std::size_t>(d) + 1, 0);
  auto ac = a.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) c[static_cast<std::size_t>(d) - i] = ac[i];
  return Poly(a.field(), std::move(c));
}

ExtendedGcd poly_xgcd(const Poly& a, const Poly& b) {
  const Field f = a.field().valid() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(f, 1), u1(f);
  Poly v0(f), v1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {Poly(f), Poly(f), Poly(f)};
  u64 inv = f.inv(r0.leading_coeff());
  return {r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

}  // namespace polyrel
