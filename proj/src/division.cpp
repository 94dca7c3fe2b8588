#include "polyrel/division.hpp"

#include <algorithm>
#include <string>

#include "polyrel/errors.hpp"

namespace polyrel {

namespace {

PolyMat inverse_series(const PolyMat& m, std::size_t t) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  ConstMat m0 = m.coefficient(0);
  if (rank(m0) != n) throw PreconditionError("expansion requires M(0) nonsingular");
  PolyMat x = PolyMat::from_const(inverse(m0));
  const PolyMat id = PolyMat::identity(f, n);
  std::size_t prec = 1;
  while (prec < t) {
    prec = std::min(2 * prec, t);
    PolyMat err = id - matmul_trunc(m, x, prec);
    x = (x + matmul_trunc(x, err, prec)).truncate(prec);
  }
  return x;
}

// Square matrix of degree about ceil(D/n) whose inverse has m^{-1} as its
// leading n x n block.
PolyMat linearize_for_inverse(const PolyMat& m, const LinearizationPlan& plan) {
  const Field& f = m.field();
  const std::size_t n = m.cols();
  const auto slice = static_cast<std::size_t>(plan.slice_degree);
  // Column index of slice k of original column i: i itself for k = 0, extra
  // slices are appended after the first n columns.
  std::vector<std::vector<std::size_t>> index(n);
  std::size_t next = n;
  for (std::size_t i = 0; i < n; ++i) {
    index[i].push_back(i);
    for (std::size_t k = 1; k < plan.block_sizes[i]; ++k) index[i].push_back(next++);
  }
  const std::size_t big = next;
  PolyMat out(f, big, big);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t alpha = plan.block_sizes[i];
    for (std::size_t r = 0; r < n; ++r) {
      const Poly& e = m(r, i);
      for (std::size_t k = 0; k < alpha; ++k) {
        std::size_t hi = k + 1 == alpha ? e.size() : (k + 1) * slice;
        out(r, index[i][k]) = e.slice(k * slice, hi);
      }
    }
  }
  std::size_t row = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 1; k < plan.block_sizes[i]; ++k) {
      out(row, index[i][k - 1]) = Poly::monomial(f, 1, slice);
      out(row, index[i][k]) = Poly::constant(f, f.modulus() - 1);
      ++row;
    }
  }
  return out;
}

void require_column_reduced(const PolyMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("divisor must be square");
  if (!is_column_reduced(m)) throw PreconditionError("divisor is not column reduced");
}

void require_reduced_operand(const PolyMat& m, const PolyMat& f) {
  if (f.cols() != m.cols()) throw ShapeError("operand column count does not match divisor");
  if (!all_less(cdeg(f), cdeg(m))) {
    throw PreconditionError("operand column degrees must be below those of the divisor");
  }
}

std::vector<PolyMat> rem_of_shifts_impl(const PolyMat& m, const PolyMat& f,
                                        std::int64_t delta, unsigned k) {
  if (k == 0) return {f};
  const std::int64_t half = delta << (k - 1);
  PolyMat g = pm_quorem(m, f.shift_up(static_cast<std::size_t>(half)), half).remainder;
  std::vector<PolyMat> stacked = rem_of_shifts_impl(m, vstack(f, g), delta, k - 1);
  const std::size_t rows = f.rows();
  std::vector<PolyMat> out;
  out.reserve(stacked.size() * 2);
  for (const auto& s : stacked) out.push_back(s.submatrix(0, rows, 0, s.cols()));
  for (const auto& s : stacked) out.push_back(s.submatrix(rows, rows, 0, s.cols()));
  return out;
}

}  // namespace

PolyMat truncated_expansion(const PolyMat& f, const PolyMat& m, std::size_t t) {
  if (m.rows() != m.cols()) throw ShapeError("expansion: M must be square");
  if (f.cols() != m.rows()) throw ShapeError("expansion: F column count mismatch");
  if (t == 0) throw PreconditionError("expansion order must be >= 1");
  const std::size_t n = m.cols();
  if (rank(m.coefficient(0)) != n) throw PreconditionError("expansion requires M(0) nonsingular");
  if (f.rows() == 0 || n == 0) return PolyMat(m.field(), f.rows(), n);

  DegreeTuple sigma = cdeg(m);
  LinearizationPlan plan = make_linearization_plan(sigma);
  std::int64_t max_deg = 0;
  for (auto d : plan.degrees) max_deg = std::max(max_deg, d);
  if (max_deg <= 2 * plan.slice_degree) {
    return matmul_trunc(f, inverse_series(m.truncate(t), t), t);
  }
  PolyMat big = linearize_for_inverse(m, plan);
  PolyMat fbig = hstack(f.truncate(t), PolyMat(m.field(), f.rows(), big.cols() - n));
  PolyMat full = matmul_trunc(fbig, inverse_series(big, t), t);
  return full.submatrix(0, f.rows(), 0, n);
}

std::int64_t quotient_degree_bound(const PolyMat& m, const PolyMat& f) {
  if (f.cols() != m.cols()) throw ShapeError("operand column count does not match divisor");
  DegreeTuple df = cdeg(f), dm = cdeg(m);
  std::int64_t delta = 1;
  for (std::size_t j = 0; j < df.size(); ++j) {
    if (df[j].is_neg_inf()) continue;
    delta = std::max(delta, df[j].value() - dm[j].value_or(0) + 1);
  }
  return delta;
}

QuoRem pm_quorem(const PolyMat& m, const PolyMat& f, std::int64_t delta) {
  require_column_reduced(m);
  if (f.cols() != m.cols()) throw ShapeError("operand column count does not match divisor");
  if (delta < 1) throw PreconditionError("quotient degree bound must be >= 1");
  const Field& fld = m.field();
  const std::size_t n = m.cols();
  const std::vector<std::int64_t> sigma = values_or(cdeg(m), 0);
  DegreeTuple df = cdeg(f);
  for (std::size_t j = 0; j < n; ++j) {
    if (df[j] >= sigma[j] + delta) {
      throw PreconditionError("column " + std::to_string(j) +
                              " of the operand exceeds cdeg(M) + delta");
    }
  }
  if (f.rows() == 0) return {PolyMat(fld, 0, n), PolyMat(fld, 0, n)};

  std::vector<std::int64_t> frev_offsets(n);
  for (std::size_t j = 0; j < n; ++j) frev_offsets[j] = sigma[j] + delta - 1;
  PolyMat mrev = column_reversal(m, sigma);
  PolyMat frev = column_reversal(f, frev_offsets);
  PolyMat qrev = truncated_expansion(frev, mrev, static_cast<std::size_t>(delta));
  PolyMat q(fld, f.rows(), n);
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) = poly_reverse(qrev(i, j), delta - 1);
  }
  PolyMat r = f - matmul_unbalanced(q, m);
  if (!all_less(cdeg(r), cdeg(m))) throw InternalError("remainder degree bound violated");
  return {std::move(q), std::move(r)};
}

PolyMat pm_rem(const PolyMat& m, const PolyMat& f) {
  return pm_quorem(m, f, quotient_degree_bound(m, f)).remainder;
}

std::vector<PolyMat> rem_of_shifts(const PolyMat& m, const PolyMat& f,
                                   std::int64_t delta, unsigned k) {
  require_column_reduced(m);
  require_reduced_operand(m, f);
  if (delta < 1) throw PreconditionError("shift step must be >= 1");
  return rem_of_shifts_impl(m, f, delta, k);
}

PolyMat expanded_remainders(const PolyMat& m, const PolyMat& f,
                            const LinearizationPlan& plan) {
  if (plan.dim() != f.rows()) throw ShapeError("plan dimension does not match operand rows");
  require_column_reduced(m);
  require_reduced_operand(m, f);
  PolyMat out(m.field(), plan.expanded_dim(), f.cols());
  std::size_t max_alpha = 1;
  for (std::size_t i = 0; i < plan.dim(); ++i) {
    max_alpha = std::max(max_alpha, plan.block_sizes[i]);
    if (plan.block_sizes[i] != 1) continue;
    for (std::size_t j = 0; j < f.cols(); ++j) out(plan.offsets[i], j) = f(i, j);
  }
  // Rows grouped by 2^(k-1) < alpha <= 2^k share one call.
  for (unsigned k = 1; (std::size_t{1} << (k - 1)) < max_alpha; ++k) {
    const std::size_t lo = std::size_t{1} << (k - 1), hi = std::size_t{1} << k;
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < plan.dim(); ++i) {
      if (plan.block_sizes[i] > lo && plan.block_sizes[i] <= hi) group.push_back(i);
    }
    if (group.empty()) continue;
    std::vector<PolyMat> rems = rem_of_shifts_impl(m, f.select_rows(group), plan.slice_degree, k);
    for (std::size_t g = 0; g < group.size(); ++g) {
      const std::size_t i = group[g];
      for (std::size_t r = 0; r < plan.block_sizes[i]; ++r) {
        for (std::size_t j = 0; j < f.cols(); ++j) out(plan.offsets[i] + r, j) = rems[r](g, j);
      }
    }
  }
  return out;
}

PolyMat residual(const PolyMat& m, const PolyMat& p, const PolyMat& f) {
  require_column_reduced(m);
  require_reduced_operand(m, f);
  if (p.cols() != f.rows()) throw ShapeError("residual: P column count must equal F row count");
  if (p.rows() == 0 || p.cols() == 0) return PolyMat(m.field(), p.rows(), m.cols());
  ColumnExpansion ex = expand_columns(p, cdeg(p));
  PolyMat fbar = expanded_remainders(m, f, ex.plan);
  PolyMat prod = matmul(ex.expanded, fbar);
  return pm_quorem(m, prod, ex.plan.slice_degree).remainder;
}

}  // namespace polyrel
