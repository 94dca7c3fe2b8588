#include "polyrel/oracle.hpp"

#include <bit>
#include <string>

#include "polyrel/errors.hpp"

namespace polyrel::oracle {

QuoRem naive_quorem(const PolyMat& m, const PolyMat& f) {
  require_same_field(m.field(), f.field());
  if (m.rows() != m.cols() || f.cols() != m.cols()) throw ShapeError("incompatible shapes");
  if (!is_column_reduced(m)) throw PreconditionError("M must be column reduced");
  const Field& fld = m.field();
  const std::size_t n = m.cols();
  DegreeTuple sigma = cdeg(m);
  ConstMat lead = column_leading_matrix(m);
  PolyMat q(fld, f.rows(), n);
  PolyMat r = f;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (;;) {
      // Largest d with x^d overshooting some column degree.
      std::int64_t d = -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (r(i, j).is_zero()) continue;
        d = std::max(d, r(i, j).degree().value() - sigma[j].value());
      }
      if (d < 0) break;
      ConstMat c(fld, 1, n);
      for (std::size_t j = 0; j < n; ++j) {
        c(0, j) = r(i, j).coeff(static_cast<std::size_t>(d + sigma[j].value()));
      }
      auto lambda = solve_left(lead, c);
      if (!lambda) throw InternalError("column leading matrix is not invertible");
      for (std::size_t k = 0; k < n; ++k) {
        const u64 l = (*lambda)(0, k);
        if (l == 0) continue;
        Poly t = Poly::monomial(fld, l, static_cast<std::size_t>(d));
        q(i, k) += t;
        for (std::size_t j = 0; j < n; ++j) r(i, j) -= t * m(k, j);
      }
    }
  }
  return {std::move(q), std::move(r)};
}

namespace {

// det of the submatrix on the given rows (in order) and the column subset
// `cols`, for every subset of size rows.size(), by expansion along the last row.
std::vector<Poly> subset_dets(const PolyMat& m, const std::vector<std::size_t>& rows) {
  const std::size_t n = m.cols();
  const Field& fld = m.field();
  std::vector<Poly> det(std::size_t{1} << n, Poly(fld));
  det[0] = Poly::constant(fld, 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k > rows.size()) continue;
    const std::size_t row = rows[k - 1];
    Poly acc(fld);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      if (!m(row, j).is_zero()) {
        const Poly& minor = det[mask & ~(1u << j)];
        Poly term = m(row, j) * minor;
        if ((k - 1 + pos) % 2 == 1) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    det[mask] = std::move(acc);
  }
  return det;
}

void require_small_square(const PolyMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  if (m.rows() > 12) throw PreconditionError("oracle determinant limited to dimension 12");
}

}  // namespace

Poly determinant(const PolyMat& m) {
  require_small_square(m);
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return subset_dets(m, rows).back();
}

DetAdj determinant_and_adjugate(const PolyMat& m) {
  require_small_square(m);
  const std::size_t n = m.rows();
  const Field& fld = m.field();
  DetAdj out{determinant(m), PolyMat(fld, n, n)};
  const std::uint32_t full = (1u << n) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != i) rows.push_back(r);
    }
    auto dets = subset_dets(m, rows);
    for (std::size_t j = 0; j < n; ++j) {
      Poly minor = dets[full & ~(1u << j)];
      out.adj(j, i) = (i + j) % 2 == 0 ? minor : -minor;
    }
  }
  return out;
}

bool annihilates(const PolyMat& p, const PolyMat& m, const PolyMat& f) {
  if (p.cols() != f.rows() || f.cols() != m.cols()) throw ShapeError("incompatible shapes");
  if (m.cols() == 0) return true;
  DetAdj da = determinant_and_adjugate(m);
  if (da.det.is_zero()) throw PreconditionError("M is singular");
  PolyMat t = matmul(matmul(p, f), da.adj);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (!poly_rem(t(i, j), da.det).is_zero()) return false;
    }
  }
  return true;
}

std::vector<PolyMat> brute_force_relations(const PolyMat& m, const PolyMat& f,
                                           std::int64_t dmax) {
  if (f.cols() != m.cols()) throw ShapeError("incompatible shapes");
  if (dmax < 0) throw PreconditionError("negative degree bound");
  const Field& fld = m.field();
  const std::size_t rows = f.rows(), n = m.cols();
  const auto span = static_cast<std::size_t>(dmax) + 1;
  DetAdj da = n == 0 ? DetAdj{Poly::constant(fld, 1), PolyMat(fld, 0, 0)}
                     : determinant_and_adjugate(m);
  if (da.det.is_zero()) throw PreconditionError("M is singular");
  const auto dd = static_cast<std::size_t>(da.det.degree().value());
  PolyMat fa = matmul(f, da.adj);
  // Unknown (i, k) stands for x^k e_i; its image is x^k (F adj)_i mod det.
  ConstMat image(fld, rows * span, n * dd);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < span; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        Poly r = poly_rem(fa(i, j).shift_up(k), da.det);
        for (std::size_t c = 0; c < dd; ++c) image(i * span + k, j * dd + c) = r.coeff(c);
      }
    }
  }
  ConstMat ker = left_nullspace(image);
  std::vector<PolyMat> out;
  for (std::size_t t = 0; t < ker.rows(); ++t) {
    PolyMat v(fld, 1, rows);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<u64> c(span);
      for (std::size_t k = 0; k < span; ++k) c[k] = ker(t, i * span + k);
      v(0, i) = Poly(fld, std::move(c));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool verify_relation_basis(const PolyMat& p, const PolyMat& m, const PolyMat& f,
                           const Shift& s) {
  if (p.rows() != f.rows() || p.cols() != f.rows()) return false;
  if (!is_popov(p, s)) return false;
  if (!annihilates(p, m, f)) return false;
  const Poly det = m.cols() == 0 ? Poly::constant(m.field(), 1) : determinant(m);
  const std::int64_t dd = det.degree().value();
  std::int64_t total = 0;
  for (auto d : diagonal_degrees(p)) total += d;
  if (total > dd) return false;
  for (const PolyMat& v : brute_force_relations(m, f, dd)) {
    if (!reduce_vector_mod_rowspace(v, p, s).is_zero()) return false;
  }
  return true;
}

}  // namespace polyrel::oracle
