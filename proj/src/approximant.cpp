#include "polyrel/approximant.hpp"

#include <algorithm>
#include <string>

#include "polyrel/errors.hpp"
#include "polyrel/linalg_base.hpp"

namespace polyrel {

namespace {

using Coeffs = std::vector<u64>;

void axpy(const Field& f, Coeffs& dst, const Coeffs& src, u64 c, std::size_t from = 0) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t t = from; t < src.size(); ++t) {
    if (src[t] != 0) dst[t] = f.sub(dst[t], f.mul(c, src[t]));
  }
}

void validate(const PolyMat& g, const std::vector<std::int64_t>& orders, const Shift& u) {
  if (orders.size() != g.cols()) throw ShapeError("one order per column of G is required");
  if (u.size() != g.rows()) throw ShapeError("shift length must equal the row count of G");
  for (auto t : orders) {
    if (t < 1) throw PreconditionError("approximation orders must be >= 1");
  }
}

}  // namespace

ApproximantBasis approximant_basis_weak_popov(const PolyMat& g,
                                              const std::vector<std::int64_t>& orders,
                                              const Shift& u) {
  validate(g, orders, u);
  const Field& f = g.field();
  const std::size_t r = g.rows(), n = g.cols();

  // basis[i][c]: coefficients of entry (i, c); res[i][j]: p_i * G_j mod x^tau_j.
  std::vector<std::vector<Coeffs>> basis(r, std::vector<Coeffs>(r));
  std::vector<std::vector<Coeffs>> res(r, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < r; ++i) {
    basis[i][i] = {1};
    for (std::size_t j = 0; j < n; ++j) {
      auto tau = static_cast<std::size_t>(orders[j]);
      Coeffs c(tau, 0);
      auto gc = g(i, j).coeffs();
      std::copy_n(gc.begin(), std::min(tau, gc.size()), c.begin());
      res[i][j] = std::move(c);
    }
  }
  std::vector<std::int64_t> deg(r, 0);
  const auto max_order = static_cast<std::size_t>(
      orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end()));

  for (std::size_t k = 0; k < max_order; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (k >= static_cast<std::size_t>(orders[j])) continue;
      std::size_t piv = r;
      for (std::size_t i = 0; i < r; ++i) {
        if (res[i][j][k] == 0) continue;
        if (piv == r || deg[i] + u[i] < deg[piv] + u[piv]) piv = i;
      }
      if (piv == r) continue;
      const u64 inv = f.inv(res[piv][j][k]);
      for (std::size_t i = 0; i < r; ++i) {
        if (i == piv || res[i][j][k] == 0) continue;
        const u64 c = f.mul(res[i][j][k], inv);
        for (std::size_t col = 0; col < r; ++col) axpy(f, basis[i][col], basis[piv][col], c);
        for (std::size_t jj = 0; jj < n; ++jj) axpy(f, res[i][jj], res[piv][jj], c, k);
      }
      for (std::size_t col = 0; col < r; ++col) {
        auto& e = basis[piv][col];
        if (!e.empty()) e.insert(e.begin(), 0);
      }
      for (std::size_t jj = 0; jj < n; ++jj) {
        auto& e = res[piv][jj];
        e.insert(e.begin(), 0);
        e.pop_back();
      }
      ++deg[piv];
    }
  }

  PolyMat out(f, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < r; ++c) out(i, c) = Poly(f, std::move(basis[i][c]));
  }
  return {std::move(out), std::move(deg)};
}

namespace {

// Below this order the coefficient-by-coefficient method is used directly.
constexpr std::int64_t kBaseOrder = 32;

PolyMat coefficient_slice(const PolyMat& a, std::size_t lo, std::size_t hi) {
  PolyMat out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).slice(lo, hi);
  }
  return out;
}

// Ordered weak Popov approximant basis at a uniform order, splitting the
// order in halves: P = P2 P1 where P1 handles the low half and P2 the
// residual (P1 G) div x^h, under the shift u + (pivot degrees of P1).
ApproximantBasis weak_popov_uniform(const PolyMat& g, std::int64_t order, const Shift& u) {
  if (order <= kBaseOrder || g.is_zero()) {
    return approximant_basis_weak_popov(g, std::vector<std::int64_t>(g.cols(), order), u);
  }
  const std::int64_t h = order / 2;
  ApproximantBasis low = weak_popov_uniform(g.truncate(static_cast<std::size_t>(h)), h, u);
  PolyMat res = coefficient_slice(matmul_trunc(low.basis, g, static_cast<std::size_t>(order)),
                                  static_cast<std::size_t>(h), static_cast<std::size_t>(order));
  Shift t = u;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += low.degrees[i];
  ApproximantBasis high = weak_popov_uniform(res, order - h, t);
  std::vector<std::int64_t> deg(low.degrees);
  for (std::size_t i = 0; i < deg.size(); ++i) deg[i] += high.degrees[i];
  return {matmul(high.basis, low.basis), std::move(deg)};
}

// The same module with all orders equal to the largest one, columns of
// smaller order being multiplied by the matching power of x.
ApproximantBasis weak_popov_any(const PolyMat& g, const std::vector<std::int64_t>& orders,
                                const Shift& u) {
  const std::int64_t top =
      orders.empty() ? 1 : *std::max_element(orders.begin(), orders.end());
  if (top <= kBaseOrder) return approximant_basis_weak_popov(g, orders, u);
  PolyMat lifted(g.field(), g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      lifted(i, j) = g(i, j).truncate(static_cast<std::size_t>(orders[j]))
                         .shift_up(static_cast<std::size_t>(top - orders[j]));
    }
  }
  return weak_popov_uniform(lifted, top, u);
}

}  // namespace

ApproximantBasis approximant_basis_popov(const PolyMat& g,
                                         const std::vector<std::int64_t>& orders,
                                         const Shift& u) {
  validate(g, orders, u);
  ApproximantBasis first = weak_popov_any(g, orders, u);
  Shift minus(first.degrees.size());
  for (std::size_t i = 0; i < minus.size(); ++i) minus[i] = -first.degrees[i];
  ApproximantBasis second = weak_popov_any(g, orders, minus);
  if (second.degrees != first.degrees) {
    throw InternalError("minimal degree changed under the -delta shift");
  }
  ConstMat lead = leading_matrix_shifted(second.basis, minus);
  PolyMat popov = matmul(PolyMat::from_const(inverse(lead)), second.basis);
  return {std::move(popov), std::move(first.degrees)};
}

PolyMat kernel_basis_popov(const PolyMat& a, const Shift& u, std::int64_t degree_bound) {
  if (u.size() != a.rows()) throw ShapeError("shift length must equal the row count");
  if (degree_bound < 0) throw PreconditionError("kernel degree bound must be nonnegative");
  const Field& f = a.field();
  const std::size_t r = a.rows();
  if (a.cols() == 0 || a.is_zero()) return PolyMat::identity(f, r);
  if (r == 0) return PolyMat(f, 0, 0);
  const auto [umin, umax] = std::minmax_element(u.begin(), u.end());
  const std::int64_t spread = *umax - *umin;
  const std::int64_t adeg = a.degree().value();
  // Rows involved in expressing a kernel row have degree at most
  // degree_bound + spread, so their products with A vanish below this order
  // only if they vanish exactly.
  const std::int64_t order = degree_bound + spread + adeg + 1;
  ApproximantBasis ab =
      approximant_basis_popov(a, std::vector<std::int64_t>(a.cols(), order), u);
  PolyMat prod = matmul(ab.basis, a);
  std::vector<std::size_t> kernel_rows;
  for (std::size_t i = 0; i < r; ++i) {
    if (prod.row_is_zero(i)) kernel_rows.push_back(i);
  }
  return ab.basis.select_rows(kernel_rows);
}

PolyMat relations_mod_single_poly(const Poly& modulus, const PolyMat& f, const Shift& s) {
  if (modulus.is_zero()) throw PreconditionError("relations modulo the zero polynomial");
  if (f.cols() != 1) throw ShapeError("expected a single column");
  if (s.size() != f.rows()) throw ShapeError("shift length must equal the row count");
  require_same_field(modulus.field(), f.field());
  const Field& fld = f.field();
  const std::size_t m = f.rows();
  const Degree big_d = modulus.degree();
  if (!(f.degree() < big_d)) {
    throw PreconditionError("entries of F must have degree below deg(M)");
  }
  if (m == 0) return PolyMat(fld, 0, 0);
  const std::int64_t d = big_d.value();
  if (d == 0) return PolyMat::identity(fld, m);
  PolyMat mono(fld, 1, 1);
  mono(0, 0) = modulus.monic();
  if (static_cast<std::size_t>(d) <= m) {
    return relations_from_linear_algebra(coefficient_embedding(f, {d}),
                                         multiplication_matrix(mono), s);
  }
  return relations_via_kernel(mono, f, s);
}

PolyMat relations_via_kernel(const PolyMat& m, const PolyMat& f, const Shift& s) {
  require_same_field(m.field(), f.field());
  if (m.rows() != m.cols() || f.cols() != m.cols()) throw ShapeError("incompatible shapes");
  if (s.size() != f.rows()) throw ShapeError("shift length must equal the row count");
  if (!is_column_reduced(m)) throw PreconditionError("M must be column reduced");
  const std::size_t rows = f.rows();
  if (rows == 0) return PolyMat(f.field(), 0, 0);
  DegreeTuple fd = cdeg(f), md = cdeg(m);
  std::int64_t d = 0;
  for (std::size_t j = 0; j < md.size(); ++j) {
    if (!(fd[j] < md[j])) throw PreconditionError("cdeg(F) must be below cdeg(M)");
    d += md[j].value();
  }
  Shift u = s;
  u.resize(rows + m.rows(), *std::min_element(s.begin(), s.end()));
  // The relation basis has degree at most deg det M = |cdeg M| and the
  // matching quotient part has smaller degree.
  PolyMat kernel = kernel_basis_popov(vstack(f, m), u, d);
  if (kernel.rows() != rows) {
    throw InternalError("relation kernel has " + std::to_string(kernel.rows()) +
                        " rows, expected " + std::to_string(rows));
  }
  return kernel.submatrix(0, rows, 0, rows);
}

}  // namespace polyrel
