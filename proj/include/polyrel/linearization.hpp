#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyrel/poly_mat.hpp"

namespace polyrel {

/// Parameters of a partial column linearization. Column i of degree d_i is
/// cut into `block_sizes[i]` slices of degree at most `slice_degree`:
///
///   slice_degree  = max(1, ceil(sum(d) / m))
///   block_sizes_i = max(1, ceil(d_i / slice_degree))
///
/// `expanded_degrees` lists, block after block, (slice, ..., slice, beta_i)
/// where d_i = (block_sizes_i - 1) * slice + beta_i, 1 <= beta_i <= slice,
/// and beta_i = 0 when d_i = 0.
struct LinearizationPlan {
  std::int64_t slice_degree = 1;
  std::vector<std::int64_t> degrees;
  std::vector<std::size_t> block_sizes;
  std::vector<std::size_t> offsets;
  std::vector<std::int64_t> expanded_degrees;

  std::size_t dim() const noexcept { return degrees.size(); }
  std::size_t expanded_dim() const noexcept { return expanded_degrees.size(); }
  /// 0-based index of the last expanded column of block i.
  std::size_t last_index(std::size_t i) const { return offsets[i] + block_sizes[i] - 1; }
};

/// -infinity degrees are treated as 0.
LinearizationPlan make_linearization_plan(const DegreeTuple& degrees);

struct ColumnExpansion {
  PolyMat expanded;
  LinearizationPlan plan;
};

/// Splits the columns of p into contiguous coefficient slices, low part
/// first: slice k of column i holds the coefficients of degree in
/// [k*slice, (k+1)*slice), the last slice takes everything above. Then
/// p == expanded * expansion_matrix(plan).
ColumnExpansion expand_columns(const PolyMat& p, const DegreeTuple& degrees);

/// The (expanded_dim x dim) matrix E whose row offsets[i]+k is x^(k*slice)
/// times the i-th unit vector.
PolyMat expansion_matrix(const Field& f, const LinearizationPlan& plan);

/// expanded * E, computed by shifting and adding columns.
PolyMat compress_columns(const PolyMat& expanded, const LinearizationPlan& plan);

/// a * b through a column expansion of b; same result as matmul.
PolyMat matmul_unbalanced(const PolyMat& a, const PolyMat& b);
PolyMat matmul_unbalanced(const PolyMat& a, const ColumnExpansion& b);

}  // namespace polyrel
