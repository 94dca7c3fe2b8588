#include "polyrel/relations.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <utility>

#include "polyrel/approximant.hpp"
#include "polyrel/division.hpp"
#include "polyrel/errors.hpp"
#include "polyrel/linalg_base.hpp"
#include "polyrel/linearization.hpp"

namespace polyrel {

namespace {

std::atomic<bool> g_self_check{false};

std::int64_t sum_of(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

std::vector<std::int64_t> column_degrees(const PolyMat& m) {
  DegreeTuple cd = cdeg(m);
  std::vector<std::int64_t> out(cd.size());
  for (std::size_t j = 0; j < cd.size(); ++j) {
    if (!cd[j].is_finite()) throw PreconditionError("M has a zero column");
    out[j] = cd[j].value();
  }
  return out;
}

void require_reduced_input(const PolyMat& m, const PolyMat& f, const Shift& s) {
  require_same_field(m.field(), f.field());
  if (m.rows() != m.cols()) throw ShapeError("M must be square");
  if (f.cols() != m.cols()) throw ShapeError("F must have as many columns as M");
  if (s.size() != f.rows()) throw ShapeError("shift length must equal the row count of F");
  if (!is_column_reduced(m)) throw PreconditionError("M must be column reduced");
  DegreeTuple fd = cdeg(f), md = cdeg(m);
  for (std::size_t j = 0; j < fd.size(); ++j) {
    if (!(fd[j] < md[j])) {
      throw PreconditionError("column " + std::to_string(j) +
                              " of F is not reduced modulo M");
    }
  }
}

// Checks for the self-check mode; M column reduced, F reduced modulo M.
void check_output(const PolyMat& p, const PolyMat& m, const PolyMat& f, const Shift& s) {
  if (!is_popov(p, s)) throw InternalError("relation basis is not in shifted Popov form");
  if (m.cols() > 0 && !residual(m, p, f).is_zero()) {
    throw InternalError("relation basis does not annihilate F modulo M");
  }
  const std::int64_t bound = sum_of(column_degrees(m));
  if (sum_of(diagonal_degrees(p)) > bound) {
    throw InternalError("relation basis determinant exceeds deg det M");
  }
}

PolyMat finish(PolyMat p, const PolyMat& m, const PolyMat& f, const Shift& s) {
  if (g_self_check.load(std::memory_order_relaxed)) check_output(p, m, f, s);
  return p;
}

PolyMat hermite_base_case(const PolyMat& h, const PolyMat& f, const Shift& s) {
  return relations_from_linear_algebra(coefficient_embedding(f, column_degrees(h)),
                                       multiplication_matrix(h), s);
}

PolyMat mod_hermite_rec(const PolyMat& h, const PolyMat& f, const Shift& s);

HermiteSplit split_step(const PolyMat& h, const PolyMat& f, const Shift& s) {
  const std::size_t n = h.cols(), m = f.rows();
  HermiteSplit out;
  out.n1 = n / 2;
  const std::size_t n1 = out.n1, n2 = n - n1;
  out.p1 = mod_hermite_rec(h.submatrix(0, n1, 0, n1), f.submatrix(0, m, 0, n1), s);
  out.delta1 = diagonal_degrees(out.p1);
  PolyMat g = residual(h, out.p1, f).submatrix(0, m, n1, n2);
  Shift s2 = s;
  for (std::size_t i = 0; i < m; ++i) s2[i] += out.delta1[i];
  out.p2 = mod_hermite_rec(h.submatrix(n1, n2, n1, n2), g, s2);
  out.delta2 = diagonal_degrees(out.p2);
  std::vector<std::int64_t> delta(m);
  for (std::size_t i = 0; i < m; ++i) delta[i] = out.delta1[i] + out.delta2[i];
  out.basis = known_degree_relations(h, f, s, delta);
  return out;
}

PolyMat mod_hermite_rec(const PolyMat& h, const PolyMat& f, const Shift& s) {
  const std::size_t n = h.cols(), m = f.rows();
  if (m == 0) return PolyMat(h.field(), 0, 0);
  const std::int64_t d = sum_of(column_degrees(h));
  if (d <= static_cast<std::int64_t>(m)) return hermite_base_case(h, f, s);
  if (n == 1) return relations_mod_single_poly(h(0, 0), f, s);
  return split_step(h, f, s).basis;
}

void require_hermite_input(const PolyMat& h, const PolyMat& f, const Shift& s) {
  if (!is_hermite(h)) throw PreconditionError("M must be in Hermite form");
  for (auto d : column_degrees(h)) {
    if (d < 1) throw PreconditionError("M has an identity column; clean it first");
  }
  require_reduced_input(h, f, s);
}

void row_combine(PolyMat& a, std::size_t i, std::size_t j, const Poly& u, const Poly& v,
                 const Poly& w, const Poly& z) {
  // (row i, row j) <- (u row i + v row j, w row i + z row j)
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Poly ri = a(i, c), rj = a(j, c);
    a(i, c) = u * ri + v * rj;
    a(j, c) = w * ri + z * rj;
  }
}

}  // namespace

void set_self_check(bool on) noexcept { g_self_check.store(on, std::memory_order_relaxed); }
bool self_check_enabled() noexcept { return g_self_check.load(std::memory_order_relaxed); }

CleanedInstance clean_identity_columns(const PolyMat& m, const PolyMat& f) {
  require_same_field(m.field(), f.field());
  if (m.rows() != m.cols()) throw ShapeError("M must be square");
  if (f.cols() != m.cols()) throw ShapeError("F must have as many columns as M");
  const std::size_t n = m.cols();
  const Poly one = Poly::constant(m.field(), 1);
  CleanedInstance out;
  for (std::size_t j = 0; j < n; ++j) {
    bool unit = m(j, j) == one;
    for (std::size_t i = 0; unit && i < n; ++i) {
      if (i != j && !m(i, j).is_zero()) unit = false;
    }
    if (!unit) {
      out.kept.push_back(j);
      continue;
    }
    for (std::size_t i = 0; i < f.rows(); ++i) {
      if (!f(i, j).is_zero()) {
        throw PreconditionError("F is nonzero on identity column " + std::to_string(j));
      }
    }
  }
  out.m = m.select_rows(out.kept).select_cols(out.kept);
  out.f = f.select_cols(out.kept);
  return out;
}

PolyMat known_degree_relations(const PolyMat& m, const PolyMat& f, const Shift& s,
                               const std::vector<std::int64_t>& delta) {
  require_reduced_input(m, f, s);
  if (delta.size() != f.rows()) throw ShapeError("one degree per row of F is required");
  for (auto d : delta) {
    if (d < 0) throw PreconditionError("degrees must be nonnegative");
  }
  const Field& fld = m.field();
  const std::size_t rows = f.rows();
  if (rows == 0) return PolyMat(fld, 0, 0);
  if (sum_of(delta) == 0) return finish(PolyMat::identity(fld, rows), m, f, s);

  LinearizationPlan plan = make_linearization_plan(to_degrees(delta));
  PolyMat fbar = expanded_remainders(m, f, plan);
  const std::size_t mbar = plan.expanded_dim(), n = m.cols();
  const auto slice = static_cast<std::int64_t>(plan.slice_degree);

  Shift u(mbar + n);
  for (std::size_t i = 0; i < mbar; ++i) u[i] = -plan.expanded_degrees[i];
  for (std::size_t j = 0; j < n; ++j) u[mbar + j] = -slice;
  std::vector<std::int64_t> orders = column_degrees(m);
  for (auto& t : orders) t += slice + 1;

  ApproximantBasis ab = approximant_basis_popov(vstack(fbar, m), orders, u);
  PolyMat pe = compress_columns(ab.basis.submatrix(0, mbar, 0, mbar), plan);
  std::vector<std::size_t> pick(rows);
  for (std::size_t i = 0; i < rows; ++i) pick[i] = plan.last_index(i);
  return finish(pe.select_rows(pick), m, f, s);
}

PolyMat relations_mod_hermite(const PolyMat& h, const PolyMat& f, const Shift& s) {
  require_hermite_input(h, f, s);
  return finish(mod_hermite_rec(h, f, s), h, f, s);
}

HermiteSplit relations_mod_hermite_split(const PolyMat& h, const PolyMat& f, const Shift& s) {
  require_hermite_input(h, f, s);
  if (h.cols() < 2) throw PreconditionError("splitting needs at least two columns");
  if (f.rows() == 0) throw PreconditionError("splitting needs at least one row in F");
  return split_step(h, f, s);
}

PolyMat hermite_form(const PolyMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("Hermite form needs a square matrix");
  const Field& fld = m.field();
  const std::size_t n = m.rows();
  PolyMat h = m;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      if (h(j, j).is_zero()) {
        for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j, c));
        continue;
      }
      ExtendedGcd e = poly_xgcd(h(j, j), h(i, j));
      Poly a = poly_divrem(h(j, j), e.g).first;
      Poly b = poly_divrem(h(i, j), e.g).first;
      // [[u, v], [-b, a]] has determinant u a + v b = 1.
      row_combine(h, j, i, e.u, e.v, -b, a);
    }
    if (h(j, j).is_zero()) throw PreconditionError("matrix is singular");
    const u64 inv = fld.inv(h(j, j).leading_coeff());
    for (std::size_t c = 0; c < n; ++c) h(j, c) = h(j, c).scaled(inv);
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!(h(i, j).degree() >= h(j, j).degree())) continue;
      Poly q = poly_divrem(h(i, j), h(j, j)).first;
      for (std::size_t c = j; c < n; ++c) h(i, c) -= q * h(j, c);
    }
  }
  return h;
}

PolyMat popov_form(const PolyMat& m, const Shift& s) {
  if (m.rows() != m.cols()) throw ShapeError("Popov form needs a square matrix");
  if (s.size() != m.rows()) throw ShapeError("shift length must equal the dimension");
  const Field& fld = m.field();
  const std::size_t n = m.rows();
  PolyMat h = hermite_form(m);
  // The row space of M is exactly the set of relations of rem(I, H) modulo H.
  CleanedInstance c = clean_identity_columns(h, pm_rem(h, PolyMat::identity(fld, n)));
  PolyMat p = c.kept.empty() ? PolyMat::identity(fld, n)
                             : relations_mod_hermite(c.m, c.f, s);
  if (self_check_enabled()) {
    if (!is_popov(p, s)) throw InternalError("Popov form check failed");
    if (sum_of(diagonal_degrees(p)) != sum_of(diagonal_degrees(h))) {
      throw InternalError("Popov form has the wrong determinant degree");
    }
  }
  return p;
}

PolyMat relation_basis_general(const PolyMat& m, const PolyMat& f, const Shift& s) {
  require_same_field(m.field(), f.field());
  if (m.rows() != m.cols()) throw ShapeError("M must be square");
  if (f.cols() != m.cols()) throw ShapeError("F must have as many columns as M");
  if (s.size() != f.rows()) throw ShapeError("shift length must equal the row count of F");
  const Field& fld = m.field();
  if (f.rows() == 0) return PolyMat(fld, 0, 0);
  PolyMat h = hermite_form(m);
  CleanedInstance c = clean_identity_columns(h, pm_rem(h, f));
  if (c.kept.empty()) return PolyMat::identity(fld, f.rows());
  return relations_mod_hermite(c.m, c.f, s);
}

}  // namespace polyrel
