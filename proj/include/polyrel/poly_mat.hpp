#pragma once

#include <cstddef>
#include <vector>

#include "polyrel/const_mat.hpp"
#include "polyrel/degree.hpp"
#include "polyrel/poly.hpp"

namespace polyrel {

/// Dense r x c matrix of polynomials over one prime field, row-major.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(Field f, std::size_t rows, std::size_t cols);
  PolyMat(Field f, std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  static PolyMat identity(Field f, std::size_t n);
  static PolyMat from_const(const ConstMat& c);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  /// Bounds-checked access; throws ShapeError.
  const Poly& at(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;
  /// Largest entry degree.
  Degree degree() const;

  PolyMat submatrix(std::size_t r0, std::size_t nr, std::size_t c0,
                    std::size_t nc) const;
  PolyMat row(std::size_t i) const { return submatrix(i, 1, 0, cols_); }
  PolyMat select_rows(const std::vector<std::size_t>& idx) const;
  PolyMat select_cols(const std::vector<std::size_t>& idx) const;
  PolyMat transpose() const;

  /// Coefficient of x^k of every entry.
  ConstMat coefficient(std::size_t k) const;
  /// Entries reduced modulo x^t.
  PolyMat truncate(std::size_t t) const;
  /// Multiply by x^k.
  PolyMat shift_up(std::size_t k) const;
  PolyMat scaled(u64 c) const;

  PolyMat& operator+=(const PolyMat& o);
  PolyMat& operator-=(const PolyMat& o);
  friend PolyMat operator+(PolyMat a, const PolyMat& b) { return a += b; }
  friend PolyMat operator-(PolyMat a, const PolyMat& b) { return a -= b; }
  PolyMat operator-() const;
  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);

  friend bool operator==(const PolyMat& a, const PolyMat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> e_;
};

PolyMat hstack(const PolyMat& a, const PolyMat& b);
PolyMat vstack(const PolyMat& a, const PolyMat& b);

/// Exact product; throws ShapeError on inner dimension mismatch.
PolyMat matmul(const PolyMat& a, const PolyMat& b);
/// Product truncated modulo x^t.
PolyMat matmul_trunc(const PolyMat& a, const PolyMat& b, std::size_t t);

// Degree profile ------------------------------------------------------------

DegreeTuple cdeg(const PolyMat& m);
DegreeTuple rdeg(const PolyMat& m);
/// Entry i = max_j (deg p_ij + s_j); -infinity for zero rows.
DegreeTuple rdeg_shifted(const PolyMat& p, const Shift& s);
/// Entry (i,j) = coefficient of degree d_i - s_j of p_ij with d the s-row
/// degree. Zero rows give zero rows.
ConstMat leading_matrix_shifted(const PolyMat& p, const Shift& s);
/// Leading matrix of the transpose, transposed back: entry (i,j) is the
/// coefficient of degree cdeg_j of p_ij.
ConstMat column_leading_matrix(const PolyMat& p);
/// Degrees of the diagonal entries of a square matrix.
std::vector<std::int64_t> diagonal_degrees(const PolyMat& p);

// Form predicates -----------------------------------------------------------

bool is_reduced(const PolyMat& p, const Shift& s);
bool is_column_reduced(const PolyMat& p);
bool is_popov(const PolyMat& p, const Shift& s);
bool is_hermite(const PolyMat& m);

// Reversal and membership ---------------------------------------------------

/// M(1/x) * diag(x^offsets).
PolyMat column_reversal(const PolyMat& m, const std::vector<std::int64_t>& offsets);

/// Reduces a row vector by cancelling its s-leading vector against the
/// s-reduced basis `p` until that is no longer possible. The result is zero
/// iff v belongs to the row space of p.
PolyMat reduce_vector_mod_rowspace(const PolyMat& v, const PolyMat& p,
                                   const Shift& s);

}  // namespace polyrel
