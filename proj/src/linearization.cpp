#include "polyrel/linearization.hpp"

#include "polyrel/errors.hpp"

namespace polyrel {

LinearizationPlan make_linearization_plan(const DegreeTuple& degrees) {
  LinearizationPlan plan;
  plan.degrees = values_or(degrees, 0);
  for (auto& d : plan.degrees) d = std::max<std::int64_t>(d, 0);
  const auto m = static_cast<std::int64_t>(plan.degrees.size());
  std::int64_t total = 0;
  for (auto d : plan.degrees) total += d;
  const std::int64_t slice = m == 0 ? 1 : std::max<std::int64_t>(1, (total + m - 1) / m);
  plan.slice_degree = slice;
  std::size_t offset = 0;
  for (auto d : plan.degrees) {
    const std::int64_t alpha = std::max<std::int64_t>(1, (d + slice - 1) / slice);
    const std::int64_t beta = d == 0 ? 0 : d - (alpha - 1) * slice;
    plan.block_sizes.push_back(static_cast<std::size_t>(alpha));
    plan.offsets.push_back(offset);
    offset += static_cast<std::size_t>(alpha);
    for (std::int64_t k = 0; k + 1 < alpha; ++k) plan.expanded_degrees.push_back(slice);
    plan.expanded_degrees.push_back(beta);
  }
  return plan;
}

ColumnExpansion expand_columns(const PolyMat& p, const DegreeTuple& degrees) {
  if (degrees.size() != p.cols()) throw ShapeError("expansion degrees length mismatch");
  LinearizationPlan plan = make_linearization_plan(degrees);
  const auto slice = static_cast<std::size_t>(plan.slice_degree);
  PolyMat out(p.field(), p.rows(), plan.expanded_dim());
  for (std::size_t i = 0; i < p.cols(); ++i) {
    const std::size_t alpha = plan.block_sizes[i];
    for (std::size_t r = 0; r < p.rows(); ++r) {
      const Poly& e = p(r, i);
      for (std::size_t k = 0; k < alpha; ++k) {
        std::size_t lo = k * slice;
        std::size_t hi = k + 1 == alpha ? e.size() : (k + 1) * slice;
        out(r, plan.offsets[i] + k) = e.slice(lo, hi);
      }
    }
  }
  return {std::move(out), std::move(plan)};
}

PolyMat expansion_matrix(const Field& f, const LinearizationPlan& plan) {
  PolyMat e(f, plan.expanded_dim(), plan.dim());
  const auto slice = static_cast<std::size_t>(plan.slice_degree);
  for (std::size_t i = 0; i < plan.dim(); ++i) {
    for (std::size_t k = 0; k < plan.block_sizes[i]; ++k) {
      e(plan.offsets[i] + k, i) = Poly::monomial(f, 1, k * slice);
    }
  }
  return e;
}

PolyMat compress_columns(const PolyMat& expanded, const LinearizationPlan& plan) {
  if (expanded.cols() != plan.expanded_dim()) {
    throw ShapeError("compression: column count does not match the plan");
  }
  const auto slice = static_cast<std::size_t>(plan.slice_degree);
  PolyMat out(expanded.field(), expanded.rows(), plan.dim());
  for (std::size_t i = 0; i < plan.dim(); ++i) {
    for (std::size_t r = 0; r < expanded.rows(); ++r) {
      Poly acc(expanded.field());
      for (std::size_t k = 0; k < plan.block_sizes[i]; ++k) {
        acc += expanded(r, plan.offsets[i] + k).shift_up(k * slice);
      }
      out(r, i) = std::move(acc);
    }
  }
  return out;
}

PolyMat matmul_unbalanced(const PolyMat& a, const ColumnExpansion& b) {
  return compress_columns(matmul(a, b.expanded), b.plan);
}

PolyMat matmul_unbalanced(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimension mismatch");
  return matmul_unbalanced(a, expand_columns(b, cdeg(b)));
}

}  // namespace polyrel
