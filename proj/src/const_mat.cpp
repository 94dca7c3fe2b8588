#include "polyrel/const_mat.hpp"

#include <utility>

#include "polyrel/errors.hpp"

namespace polyrel {

ConstMat ConstMat::identity(Field f, std::size_t n) {
  ConstMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ConstMat::is_zero() const {
  for (auto x : a_) {
    if (x != 0) return false;
  }
  return true;
}

bool ConstMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool ConstMat::is_unit_lower_triangular() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool ConstMat::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(i, j) != 0) return false;
  }
  return true;
}

ConstMat ConstMat::transpose() const {
  ConstMat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ConstMat ConstMat::row(std::size_t i) const {
  ConstMat r(field_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
  return r;
}

ConstMat operator*(const ConstMat& a, const ConstMat& b) {
  if (a.cols_ != b.rows_) throw ShapeError("constant matrix product: inner dimension mismatch");
  require_same_field(a.field_, b.field_);
  const Field& f = a.field_;
  ConstMat c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      u64 x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    }
  }
  return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(ConstMat& a) {
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    u64 inv = f.inv(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      u64 factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(ConstMat a) { return rref(a).size(); }

ConstMat inverse(const ConstMat& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  ConstMat aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) {
    throw PreconditionError("constant matrix is singular");
  }
  ConstMat inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::optional<ConstMat> solve_left(const ConstMat& a, const ConstMat& b) {
  // x a = b  <=>  a^T x^T = b^T.
  if (b.rows() != 1 || b.cols() != a.cols()) throw ShapeError("solve_left: shape mismatch");
  const std::size_t n = a.rows(), m = a.cols();
  ConstMat aug(a.field(), m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    aug(i, n) = b(0, i);
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  ConstMat x(a.field(), 1, n);
  for (std::size_t r = 0; r < piv.size(); ++r) x(0, piv[r]) = aug(r, n);
  return x;
}

ConstMat left_nullspace(const ConstMat& a) {
  // Kernel of a^T from its reduced echelon form.
  ConstMat t = a.transpose();
  auto piv = rref(t);
  const Field& f = a.field();
  const std::size_t n = a.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  ConstMat basis(f, n - piv.size(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      basis(row, piv[r]) = f.neg(t(r, free));
    }
    ++row;
  }
  return basis;
}

}  // namespace polyrel
