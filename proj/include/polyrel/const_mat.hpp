#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyrel/field.hpp"

namespace polyrel {

/// Dense matrix over the prime field, row-major.
class ConstMat {
 public:
  ConstMat() = default;
  ConstMat(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static ConstMat identity(Field f, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  u64& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_unit_lower_triangular() const;
  bool row_is_zero(std::size_t i) const;

  ConstMat transpose() const;
  ConstMat row(std::size_t i) const;

  friend ConstMat operator*(const ConstMat& a, const ConstMat& b);
  friend bool operator==(const ConstMat& a, const ConstMat& b) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<u64> a_;
};

std::size_t rank(ConstMat a);

/// Throws PreconditionError if `a` is singular or not square.
ConstMat inverse(const ConstMat& a);

/// Solves x * a = b for a row vector x (b is 1 x cols). Returns nullopt if
/// no solution exists.
std::optional<ConstMat> solve_left(const ConstMat& a, const ConstMat& b);

/// Rows form a basis of { x : x * a = 0 }, in reduced echelon form.
ConstMat left_nullspace(const ConstMat& a);

}  // namespace polyrel
