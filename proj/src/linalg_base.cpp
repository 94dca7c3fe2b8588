#include "polyrel/linalg_base.hpp"

#include <numeric>
#include <string>

#include "polyrel/errors.hpp"

namespace polyrel {

namespace {

std::vector<std::size_t> offsets_of(const std::vector<std::int64_t>& sigma) {
  std::vector<std::size_t> off(sigma.size() + 1, 0);
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    off[j + 1] = off[j] + static_cast<std::size_t>(sigma[j]);
  }
  return off;
}

}  // namespace

ConstMat multiplication_matrix(const PolyMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("multiplication matrix needs a square M");
  const Field& f = m.field();
  const std::size_t n = m.cols();
  std::vector<std::int64_t> sigma(n);
  DegreeTuple cd = cdeg(m);
  for (std::size_t j = 0; j < n; ++j) {
    if (!cd[j].is_finite() || cd[j].value() < 1) {
      throw PreconditionError("column " + std::to_string(j) +
                              " has degree < 1; remove identity columns first");
    }
    sigma[j] = cd[j].value();
  }
  if (!column_leading_matrix(m).is_identity()) {
    throw PreconditionError("column degrees of M must be reached by monic diagonal entries");
  }
  auto off = offsets_of(sigma);
  const std::size_t d = off[n];
  ConstMat x(f, d, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(sigma[i]); ++k) {
      x(off[i] + k, off[i] + k + 1) = 1;
    }
    // x * x^(sigma_i - 1) e_i = x^sigma_i e_i = M_i + (x^sigma_i e_i - M_i),
    // and the bracket has column degrees below sigma.
    const std::size_t row = off[i] + static_cast<std::size_t>(sigma[i]) - 1;
    for (std::size_t c = 0; c < n; ++c) {
      const Poly& e = m(i, c);
      for (std::size_t k = 0; k < static_cast<std::size_t>(sigma[c]); ++k) {
        x(row, off[c] + k) = f.neg(e.coeff(k));
      }
    }
  }
  return x;
}

ConstMat coefficient_embedding(const PolyMat& fm, const std::vector<std::int64_t>& sigma) {
  if (sigma.size() != fm.cols()) throw ShapeError("one degree per column is required");
  for (auto s : sigma) {
    if (s < 0) throw PreconditionError("negative column degree");
  }
  DegreeTuple cd = cdeg(fm);
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (!(cd[j] < sigma[j])) {
      throw PreconditionError("column " + std::to_string(j) + " of F is too large");
    }
  }
  auto off = offsets_of(sigma);
  ConstMat e(fm.field(), fm.rows(), off.back());
  for (std::size_t i = 0; i < fm.rows(); ++i) {
    for (std::size_t j = 0; j < fm.cols(); ++j) {
      const auto& c = fm(i, j).coeffs();
      for (std::size_t k = 0; k < c.size(); ++k) e(i, off[j] + k) = c[k];
    }
  }
  return e;
}

PolyMat relations_from_linear_algebra(const ConstMat& e, const ConstMat& x, const Shift& s) {
  require_same_field(e.field(), x.field());
  const Field& f = e.field();
  const std::size_t m = e.rows(), d = e.cols();
  if (x.rows() != d || x.cols() != d) throw ShapeError("X must be square of size cols(E)");
  if (s.size() != m) throw ShapeError("shift length must equal the row count of E");

  struct Accepted {
    std::size_t row;
    std::int64_t power;
  };
  std::vector<Accepted> monomials;
  // Semi-echelon basis: reduced[t] has a 1 at pivot[t] and zeros at all
  // earlier pivots; combo[t] writes it in terms of the accepted monomials.
  std::vector<std::vector<u64>> reduced, combo;
  std::vector<std::size_t> pivot;

  std::vector<std::vector<u64>> current(m, std::vector<u64>(d));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < d; ++c) current[i][c] = e(i, c);
  }
  std::vector<std::int64_t> power(m, 0);
  std::vector<bool> done(m, false);
  PolyMat out(f, m, m);

  for (std::size_t closed = 0; closed < m;) {
    std::size_t i = m;
    for (std::size_t t = 0; t < m; ++t) {
      if (done[t]) continue;
      if (i == m || power[t] + s[t] < power[i] + s[i]) i = t;
    }
    std::vector<u64> v = current[i];
    std::vector<u64> coef(d + 1, 0);  // over accepted monomials
    for (std::size_t t = 0; t < reduced.size(); ++t) {
      const u64 c = v[pivot[t]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (reduced[t][k] != 0) v[k] = f.sub(v[k], f.mul(c, reduced[t][k]));
      }
      for (std::size_t a = 0; a < combo[t].size(); ++a) {
        if (combo[t][a] != 0) coef[a] = f.add(coef[a], f.mul(c, combo[t][a]));
      }
    }
    std::size_t lead = 0;
    while (lead < d && v[lead] == 0) ++lead;
    if (lead == d) {
      // E_i X^k = sum_a coef[a] E_{row a} X^{power a}
      std::vector<std::vector<u64>> row(m);
      row[i].assign(static_cast<std::size_t>(power[i]) + 1, 0);
      row[i].back() = 1;
      for (std::size_t a = 0; a < monomials.size(); ++a) {
        if (coef[a] == 0) continue;
        auto& target = row[monomials[a].row];
        auto p = static_cast<std::size_t>(monomials[a].power);
        if (target.size() <= p) target.resize(p + 1, 0);
        target[p] = f.sub(target[p], coef[a]);
      }
      for (std::size_t c = 0; c < m; ++c) out(i, c) = Poly(f, std::move(row[c]));
      done[i] = true;
      ++closed;
      continue;
    }
    // v = E_i X^k - sum_t c_t reduced[t]
    const std::size_t a_new = monomials.size();
    monomials.push_back({i, power[i]});
    std::vector<u64> comb(d + 1, 0);
    for (std::size_t a = 0; a < a_new; ++a) comb[a] = f.neg(coef[a]);
    comb[a_new] = 1;
    const u64 inv = f.inv(v[lead]);
    for (auto& c : v) c = f.mul(c, inv);
    for (auto& c : comb) c = f.mul(c, inv);
    reduced.push_back(std::move(v));
    combo.push_back(std::move(comb));
    pivot.push_back(lead);

    std::vector<u64> next(d, 0);
    for (std::size_t r = 0; r < d; ++r) {
      const u64 c = current[i][r];
      if (c == 0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (x(r, k) != 0) next[k] = f.add(next[k], f.mul(c, x(r, k)));
      }
    }
    current[i] = std::move(next);
    ++power[i];
    if (static_cast<std::size_t>(power[i]) > d) {
      throw InternalError("Krylov sequence did not become dependent");
    }
  }
  return out;
}

}  // namespace polyrel
