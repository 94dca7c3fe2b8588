#include <doctest.h>

#include "polyrel/approximant.hpp"
#include "polyrel/errors.hpp"
#include "polyrel/oracle.hpp"
#include "polyrel/relations.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// All approximants of degree <= dmax, as rows, from the nullspace of the
// coefficient map p -> (p G mod x^tau_j)_j.
std::vector<PolyMat> brute_force_approximants(const PolyMat& g,
                                              const std::vector<std::int64_t>& tau,
                                              std::int64_t dmax) {
  const Field& f = g.field();
  const std::size_t r = g.rows(), span = static_cast<std::size_t>(dmax) + 1;
  std::size_t width = 0;
  for (auto t : tau) width += static_cast<std::size_t>(t);
  ConstMat image(f, r * span, width);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < span; ++k) {
      std::size_t off = 0;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        Poly e = g(i, j).shift_up(k);
        for (std::size_t c = 0; c < static_cast<std::size_t>(tau[j]); ++c) {
          image(i * span + k, off + c) = e.coeff(c);
        }
        off += static_cast<std::size_t>(tau[j]);
      }
    }
  }
  ConstMat ker = left_nullspace(image);
  std::vector<PolyMat> out;
  for (std::size_t t = 0; t < ker.rows(); ++t) {
    PolyMat v(f, 1, r);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<u64> c(span);
      for (std::size_t k = 0; k < span; ++k) c[k] = ker(t, i * span + k);
      v(0, i) = Poly(f, std::move(c));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool is_approximant(const PolyMat& p, const PolyMat& g, const std::vector<std::int64_t>& tau) {
  PolyMat pg = matmul(p, g);
  for (std::size_t i = 0; i < pg.rows(); ++i) {
    for (std::size_t j = 0; j < pg.cols(); ++j) {
      if (!pg(i, j).truncate(static_cast<std::size_t>(tau[j])).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("approximant basis examples") {
  auto z = approximant_basis_popov(PolyMat(kBig, 3, 2), {2, 5}, {0, 1, 2});
  CHECK(z.basis == PolyMat::identity(kBig, 3));
  CHECK(z.degrees == std::vector<std::int64_t>{0, 0, 0});

  CHECK(approximant_basis_popov(pm(kBig, {{{1}}}), {3}, {0}).basis == pm(kBig, {{{0, 0, 0, 1}}}));

  auto a = approximant_basis_popov(pm(kBig, {{{1}}, {{0, 1}}}), {2}, {0, 0});
  CHECK(a.basis == pm(kBig, {{{0, 1}, {-1}}, {{}, {0, 1}}}));
  CHECK(a.degrees == std::vector<std::int64_t>{1, 1});

  CHECK_THROWS_AS(approximant_basis_popov(pm(kBig, {{{1}}}), {0}, {0}), PreconditionError);
  CHECK_THROWS_AS(approximant_basis_popov(pm(kBig, {{{1}}}), {1, 1}, {0}), ShapeError);
}

TEST_CASE("approximant bases are canonical and complete") {
  Rng rng(101);
  for (const Field* f : {&kSmall, &kBig}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t r = uniform(rng, 1, 4), n = uniform(rng, 1, 3);
      PolyMat g = random_polymat(*f, r, n, 4, rng);
      std::vector<std::int64_t> tau(n);
      for (auto& x : tau) x = uniform_signed(rng, 1, 5);
      Shift u = random_shift(r, -4, 4, rng);
      ApproximantBasis ab = approximant_basis_popov(g, tau, u);
      CHECK(is_popov(ab.basis, u));
      CHECK(is_approximant(ab.basis, g, tau));
      CHECK(diagonal_degrees(ab.basis) == ab.degrees);
      std::int64_t total = 0, sum_tau = 0;
      for (auto d : ab.degrees) total += d;
      for (auto x : tau) sum_tau += x;
      CHECK(total <= sum_tau);

      const std::int64_t dmax = *std::max_element(ab.degrees.begin(), ab.degrees.end());
      for (const PolyMat& v : brute_force_approximants(g, tau, dmax)) {
        CHECK(reduce_vector_mod_rowspace(v, ab.basis, u).is_zero());
      }

      Shift shifted = u;
      for (auto& x : shifted) x += 7;
      CHECK(approximant_basis_popov(g, tau, shifted).basis == ab.basis);
    }
  }
}

TEST_CASE("high orders agree with the order-by-order basis") {
  Rng rng(2024);
  for (const Field* f : {&kSmall, &kBig}) {
    for (int t = 0; t < 6; ++t) {
      const std::size_t r = uniform(rng, 2, 3), n = uniform(rng, 1, 2);
      PolyMat g = random_polymat(*f, r, n, 40, rng);
      std::vector<std::int64_t> tau(n);
      for (auto& x : tau) x = uniform_signed(rng, 33, 90);
      Shift u = random_shift(r, -5, 5, rng);
      ApproximantBasis fast = approximant_basis_popov(g, tau, u);
      ApproximantBasis slow = approximant_basis_weak_popov(g, tau, u);
      CHECK(is_popov(fast.basis, u));
      CHECK(is_approximant(fast.basis, g, tau));
      PolyMat id = PolyMat::identity(*f, r);
      CHECK(oracle::annihilates(slow.basis, fast.basis, id));
      CHECK(oracle::annihilates(fast.basis, slow.basis, id));
    }
  }
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis_popov(PolyMat::identity(kBig, 3), {0, 0, 0}, 0).rows() == 0);
  CHECK(kernel_basis_popov(pm(kBig, {{{}}, {{1}}}), {0, 0}, 0) == pm(kBig, {{{1}, {}}}));
  CHECK(kernel_basis_popov(pm(kBig, {{{0, 1}}, {{1}}}), {0, 0}, 1) == pm(kBig, {{{-1}, {0, 1}}}));

  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = uniform(rng, 1, 2), r = n + uniform(rng, 1, 3);
    PolyMat a = random_polymat(kBig, r, n, 3, rng);
    Shift u(r, 0);
    // For generic A, the kernel basis has degree at most n * deg(A).
    PolyMat k = kernel_basis_popov(a, u, static_cast<std::int64_t>(n) * 2 + 2);
    CHECK(k.rows() == r - n);
    CHECK(matmul(k, a).is_zero());
    CHECK(rank(leading_matrix_shifted(k, u)) == r - n);
    CHECK(kernel_basis_popov(a, u, 20) == k);
  }
}

TEST_CASE("relations modulo a single polynomial") {
  const Poly x2 = Poly::monomial(kBig, 1, 2);
  CHECK(relations_mod_single_poly(x2, PolyMat(kBig, 3, 1), {0, 1, 2}) ==
        PolyMat::identity(kBig, 3));
  CHECK(relations_mod_single_poly(x2, pm(kBig, {{{1}}, {{0, 1}}}), {0, 0}) ==
        pm(kBig, {{{0, 1}, {-1}}, {{}, {0, 1}}}));
  CHECK(relations_mod_single_poly(x2, pm(kBig, {{{0, 1}}}), {0}) == pm(kBig, {{{0, 1}}}));
  CHECK_THROWS_AS(relations_mod_single_poly(Poly(kBig), pm(kBig, {{{1}}}), {0}),
                  PreconditionError);
  CHECK_THROWS_AS(relations_mod_single_poly(x2, pm(kBig, {{{0, 0, 1}}}), {0}),
                  PreconditionError);

  Rng rng(55);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = uniform(rng, 1, 4);
    const std::int64_t d = uniform_signed(rng, 1, 12);
    PolyMat h = random_hermite(kSmall, {d}, rng);
    PolyMat f = random_below(kSmall, m, {d}, rng);
    Shift s = random_shift(m, -5, 5, rng);
    PolyMat p = relations_mod_single_poly(h(0, 0), f, s);
    CHECK(is_popov(p, s));
    CHECK(p == relations_mod_hermite(h, f, s));
    CHECK(p == relations_via_kernel(h, f, s));
  }
}
