#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <random>
#include <vector>

#include "polyrel/pmat_io.hpp"
#include "polyrel/poly_mat.hpp"

namespace polyrel {
inline std::ostream& operator<<(std::ostream& os, const PolyMat& m) { return os << "\n" << emit_pmat(m); }
inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << "[";
  for (auto c : p.coeffs()) os << " " << c;
  return os << " ]";
}
}  // namespace polyrel

namespace testing {

using namespace polyrel;
using Rng = std::mt19937_64;

inline const Field kBig{kDefaultModulus};
inline const Field kSmall{7};

using Entry = std::initializer_list<std::int64_t>;

/// Matrix from signed coefficient lists, low degree first; {} is zero.
inline PolyMat pm(const Field& f, std::initializer_list<std::initializer_list<Entry>> rows) {
  std::vector<Poly> e;
  std::size_t r = 0, c = 0;
  for (auto row : rows) {
    c = row.size();
    ++r;
    for (auto entry : row) e.push_back(Poly::from_signed(f, entry));
  }
  return PolyMat(f, r, c, std::move(e));
}

inline u64 uniform(Rng& rng, u64 lo, u64 hi) {
  return std::uniform_int_distribution<u64>(lo, hi)(rng);
}
inline std::int64_t uniform_signed(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline u64 random_nonzero(const Field& f, Rng& rng) { return uniform(rng, 1, f.modulus() - 1); }

/// Uniform polynomial of degree < size (size 0 gives zero).
inline Poly random_poly(const Field& f, std::int64_t size, Rng& rng) {
  std::vector<u64> c(static_cast<std::size_t>(std::max<std::int64_t>(size, 0)));
  for (auto& x : c) x = uniform(rng, 0, f.modulus() - 1);
  return Poly(f, std::move(c));
}

/// Degree exactly d.
inline Poly random_poly_of_degree(const Field& f, std::int64_t d, Rng& rng) {
  Poly p = random_poly(f, d, rng);
  p.set_coeff(static_cast<std::size_t>(d), random_nonzero(f, rng));
  return p;
}

inline PolyMat random_polymat(const Field& f, std::size_t r, std::size_t c, std::int64_t size,
                              Rng& rng) {
  PolyMat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_poly(f, size, rng);
  }
  return m;
}

/// Entries of column j have degree < bounds[j].
inline PolyMat random_below(const Field& f, std::size_t r, const std::vector<std::int64_t>& bounds,
                            Rng& rng) {
  PolyMat m(f, r, bounds.size());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < bounds.size(); ++j) m(i, j) = random_poly(f, bounds[j], rng);
  }
  return m;
}

inline ConstMat random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    ConstMat a(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform(rng, 0, f.modulus() - 1);
    }
    if (rank(a) == n) return a;
  }
}

/// Column reduced with column degrees sigma: a random invertible column
/// leading matrix on top of random lower-degree terms.
inline PolyMat random_column_reduced(const Field& f, const std::vector<std::int64_t>& sigma,
                                     Rng& rng) {
  const std::size_t n = sigma.size();
  ConstMat lead = random_invertible(f, n, rng);
  PolyMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly e = random_poly(f, sigma[j], rng);
      e += Poly::monomial(f, lead(i, j), static_cast<std::size_t>(sigma[j]));
      m(i, j) = e;
    }
  }
  return m;
}

/// Hermite form with the given diagonal degrees.
inline PolyMat random_hermite(const Field& f, const std::vector<std::int64_t>& diag, Rng& rng) {
  const std::size_t n = diag.size();
  PolyMat h(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly d = random_poly(f, diag[j], rng);
    d += Poly::monomial(f, 1, static_cast<std::size_t>(diag[j]));
    h(j, j) = d;
    for (std::size_t i = 0; i < j; ++i) h(i, j) = random_poly(f, diag[j], rng);
  }
  return h;
}

/// Random positive degrees with the given total (needs total >= n).
inline std::vector<std::int64_t> random_composition(std::size_t n, std::int64_t total, Rng& rng) {
  std::vector<std::int64_t> d(n, 1);
  for (std::int64_t k = static_cast<std::int64_t>(n); k < total; ++k) {
    ++d[uniform(rng, 0, n - 1)];
  }
  return d;
}

/// Product of elementary unimodular matrices with low-degree multipliers.
inline PolyMat random_unimodular(const Field& f, std::size_t n, Rng& rng, int steps = 6) {
  PolyMat u = PolyMat::identity(f, n);
  if (n == 0) return u;
  for (int t = 0; t < steps; ++t) {
    std::size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
    PolyMat e = PolyMat::identity(f, n);
    if (i == j) {
      e(i, i) = Poly::constant(f, random_nonzero(f, rng));
    } else {
      e(i, j) = random_poly(f, 3, rng);
    }
    u = matmul(e, u);
  }
  return u;
}

inline Shift random_shift(std::size_t n, std::int64_t lo, std::int64_t hi, Rng& rng) {
  Shift s(n);
  for (auto& x : s) x = uniform_signed(rng, lo, hi);
  return s;
}

}  // namespace testing
