#include "polyrel/poly_mat.hpp"

#include <algorithm>
#include <string>

#include "polyrel/errors.hpp"

namespace polyrel {

PolyMat::PolyMat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Poly(f)) {}

PolyMat::PolyMat(Field f, std::size_t rows, std::size_t cols,
                 std::vector<Poly> entries)
    : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw ShapeError("entry count does not match shape");
  for (auto& p : e_) {
    if (p.is_zero()) {
      p = Poly(f);
    } else {
      require_same_field(f, p.field());
    }
  }
}

PolyMat PolyMat::identity(Field f, std::size_t n) {
  PolyMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(f, 1);
  return m;
}

PolyMat PolyMat::from_const(const ConstMat& c) {
  PolyMat m(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      m(i, j) = Poly::constant(c.field(), c(i, j));
    }
  }
  return m;
}

const Poly& PolyMat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw ShapeError("index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range");
  }
  return (*this)(i, j);
}

bool PolyMat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMat::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

Degree PolyMat::degree() const {
  Degree d;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

PolyMat PolyMat::submatrix(std::size_t r0, std::size_t nr, std::size_t c0,
                           std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("submatrix out of range");
  PolyMat s(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  }
  return s;
}

PolyMat PolyMat::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMat s(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw ShapeError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
  }
  return s;
}

PolyMat PolyMat::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMat s(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw ShapeError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) s(i, j) = (*this)(i, idx[j]);
  }
  return s;
}

PolyMat PolyMat::transpose() const {
  PolyMat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ConstMat PolyMat::coefficient(std::size_t k) const {
  ConstMat c(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j).coeff(k);
  }
  return c;
}

PolyMat PolyMat::truncate(std::size_t t) const {
  PolyMat r = *this;
  for (auto& p : r.e_) p = p.truncate(t);
  return r;
}

PolyMat PolyMat::shift_up(std::size_t k) const {
  PolyMat r = *this;
  for (auto& p : r.e_) p = p.shift_up(k);
  return r;
}

PolyMat PolyMat::scaled(u64 c) const {
  PolyMat r = *this;
  for (auto& p : r.e_) p = p.scaled(c);
  return r;
}

PolyMat& PolyMat::operator+=(const PolyMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
  require_same_field(field_, o.field_);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

PolyMat& PolyMat::operator-=(const PolyMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shape mismatch");
  require_same_field(field_, o.field_);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

PolyMat PolyMat::operator-() const {
  PolyMat r = *this;
  for (auto& p : r.e_) p = -p;
  return r;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) { return matmul(a, b); }

bool operator==(const PolyMat& a, const PolyMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         (a.e_.empty() || a.field_ == b.field_) && a.e_ == b.e_;
}

PolyMat hstack(const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row count mismatch");
  require_same_field(a.field(), b.field());
  PolyMat r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

PolyMat vstack(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack: column count mismatch");
  require_same_field(a.field(), b.field());
  PolyMat r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

namespace {

// Rough operation counts of the entrywise product against transforming
// every entry once and multiplying pointwise.
bool prefer_transform(const PolyMat& a, const PolyMat& b, std::int64_t da, std::int64_t db,
                      std::size_t need) {
  if (std::min(da, db) < 4) return false;
  std::size_t len = 1, lg = 0;
  while (len < need) {
    len <<= 1;
    ++lg;
  }
  const double r = static_cast<double>(a.rows()), k = static_cast<double>(a.cols()),
               c = static_cast<double>(b.cols());
  const double direct = r * k * c * static_cast<double>(da + 1) * static_cast<double>(db + 1);
  const double transformed = (r * k + k * c + r * c) * static_cast<double>(len * lg) +
                             r * k * c * static_cast<double>(len);
  return transformed < direct;
}

// Every entry transformed once, products accumulated pointwise.
PolyMat matmul_transform(const PolyMat& a, const PolyMat& b, std::size_t need) {
  const Field& f = a.field();
  const u64 p = f.modulus();
  std::size_t n = 1;
  while (n < need) n <<= 1;
  auto transform = [&](const Poly& x) {
    std::vector<u64> v(n, 0);
    std::copy(x.coeffs().begin(), x.coeffs().end(), v.begin());
    if (!x.is_zero()) detail::ntt(v, false);
    return v;
  };
  std::vector<std::vector<u64>> ta(a.rows() * a.cols()), tb(b.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k).is_zero()) ta[i * a.cols() + k] = transform(a(i, k));
    }
  }
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(k, j).is_zero()) tb[k * b.cols() + j] = transform(b(k, j));
    }
  }
  PolyMat c(f, a.rows(), b.cols());
  std::vector<u64> acc(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      int pending = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const auto& x = ta[i * a.cols() + k];
        const auto& y = tb[k * b.cols() + j];
        if (x.empty() || y.empty()) continue;
        any = true;
        // Products are below 2^60, so 15 of them fit on top of a reduced value.
        for (std::size_t t = 0; t < n; ++t) acc[t] += x[t] * y[t];
        if (++pending == 15) {
          for (auto& v : acc) v %= p;
          pending = 0;
        }
      }
      if (!any) continue;
      for (auto& v : acc) v %= p;
      detail::ntt(acc, true);
      std::vector<u64> out(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(std::min(need, n)));
      c(i, j) = Poly(f, std::move(out));
    }
  }
  return c;
}

}  // namespace

PolyMat matmul(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: inner dimension mismatch (" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
  }
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  Degree da = a.degree(), db = b.degree();
  if (da.is_neg_inf() || db.is_neg_inf()) return PolyMat(f, a.rows(), b.cols());
  const auto need = static_cast<std::size_t>(da.value() + db.value() + 1);
  if (detail::ntt_supported(f, need) && prefer_transform(a, b, da.value(), db.value(), need)) {
    return matmul_transform(a, b, need);
  }
  PolyMat c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly acc(f);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

PolyMat matmul_trunc(const PolyMat& a, const PolyMat& b, std::size_t t) {
  return matmul(a.truncate(t), b.truncate(t)).truncate(t);
}

// ---------------------------------------------------------------------------

DegreeTuple cdeg(const PolyMat& m) {
  DegreeTuple d(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[j] = std::max(d[j], m(i, j).degree());
  }
  return d;
}

DegreeTuple rdeg(const PolyMat& m) {
  return rdeg_shifted(m, Shift(m.cols(), 0));
}

DegreeTuple rdeg_shifted(const PolyMat& p, const Shift& s) {
  if (s.size() != p.cols()) {
    throw ShapeError("shift length " + std::to_string(s.size()) +
                     " does not match column count " + std::to_string(p.cols()));
  }
  DegreeTuple d(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) d[i] = std::max(d[i], p(i, j).degree() + s[j]);
  }
  return d;
}

ConstMat leading_matrix_shifted(const PolyMat& p, const Shift& s) {
  DegreeTuple d = rdeg_shifted(p, s);
  ConstMat l(p.field(), p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (d[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      std::int64_t k = d[i].value() - s[j];
      if (k >= 0) l(i, j) = p(i, j).coeff(static_cast<std::size_t>(k));
    }
  }
  return l;
}

ConstMat column_leading_matrix(const PolyMat& p) {
  DegreeTuple d = cdeg(p);
  ConstMat l(p.field(), p.rows(), p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    if (d[j].is_neg_inf()) continue;
    auto k = static_cast<std::size_t>(d[j].value());
    for (std::size_t i = 0; i < p.rows(); ++i) l(i, j) = p(i, j).coeff(k);
  }
  return l;
}

std::vector<std::int64_t> diagonal_degrees(const PolyMat& p) {
  if (p.rows() != p.cols()) throw ShapeError("diagonal degrees of a non-square matrix");
  std::vector<std::int64_t> d(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Degree di = p(i, i).degree();
    if (di.is_neg_inf()) throw PreconditionError("zero diagonal entry");
    d[i] = di.value();
  }
  return d;
}

bool is_reduced(const PolyMat& p, const Shift& s) {
  if (p.rows() != p.cols()) return false;
  return rank(leading_matrix_shifted(p, s)) == p.rows();
}

bool is_column_reduced(const PolyMat& p) {
  if (p.rows() != p.cols()) return false;
  return rank(column_leading_matrix(p)) == p.rows();
}

bool is_popov(const PolyMat& p, const Shift& s) {
  if (p.rows() != p.cols() || s.size() != p.cols()) return false;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (p.row_is_zero(i)) return false;
  }
  return leading_matrix_shifted(p, s).is_unit_lower_triangular() &&
         column_leading_matrix(p).is_identity();
}

bool is_hermite(const PolyMat& m) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (!m(j, j).is_monic()) return false;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (!m(i, j).is_zero()) return false;
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (!(m(i, j).degree() < m(j, j).degree())) return false;
    }
  }
  return true;
}

PolyMat column_reversal(const PolyMat& m, const std::vector<std::int64_t>& offsets) {
  if (offsets.size() != m.cols()) throw ShapeError("reversal offsets length mismatch");
  PolyMat r(m.field(), m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j).degree() > offsets[j]) {
        throw PreconditionError("column " + std::to_string(j) +
                                " has degree above its reversal offset");
      }
      r(i, j) = poly_reverse(m(i, j), offsets[j]);
    }
  }
  return r;
}

PolyMat reduce_vector_mod_rowspace(const PolyMat& v, const PolyMat& p, const Shift& s) {
  if (v.rows() != 1 || v.cols() != p.cols()) throw ShapeError("reduction: expected a row vector");
  if (p.rows() != p.cols()) throw ShapeError("reduction: basis must be square");
  ConstMat lead = leading_matrix_shifted(p, s);
  if (rank(lead) != p.rows()) {
    throw PreconditionError("reduction basis is not reduced for the given shift");
  }
  const Field& f = p.field();
  const DegreeTuple pdeg = rdeg_shifted(p, s);
  const ConstMat lead_inv = inverse(lead);
  PolyMat r = v;
  while (true) {
    Degree d = rdeg_shifted(r, s)[0];
    if (d.is_neg_inf()) return r;
    ConstMat lv(f, 1, r.cols());
    for (std::size_t j = 0; j < r.cols(); ++j) {
      std::int64_t k = d.value() - s[j];
      if (k >= 0) lv(0, j) = r(0, j).coeff(static_cast<std::size_t>(k));
    }
    ConstMat lambda = lv * lead_inv;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      if (lambda(0, i) != 0 && pdeg[i] > d) return r;
    }
    for (std::size_t i = 0; i < p.rows(); ++i) {
      u64 c = lambda(0, i);
      if (c == 0) continue;
      auto e = static_cast<std::size_t>(d.value() - pdeg[i].value());
      for (std::size_t j = 0; j < r.cols(); ++j) {
        if (p(i, j).is_zero()) continue;
        r(0, j) -= p(i, j).scaled(c).shift_up(e);
      }
    }
  }
}

}  // namespace polyrel
