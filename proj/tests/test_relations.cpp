#include <doctest.h>

#include "polyrel/approximant.hpp"
#include "polyrel/division.hpp"
#include "polyrel/errors.hpp"
#include "polyrel/linalg_base.hpp"
#include "polyrel/oracle.hpp"
#include "polyrel/relations.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const PolyMat kH = pm(kBig, {{{0, 1}, {1}}, {{}, {0, 1}}});

struct SelfCheck {
  SelfCheck() { set_self_check(true); }
  ~SelfCheck() { set_self_check(false); }
};

}  // namespace

TEST_CASE("identity column cleaning") {
  CleanedInstance a = clean_identity_columns(PolyMat::identity(kBig, 3), PolyMat(kBig, 2, 3));
  CHECK(a.m.rows() == 0);
  CHECK(a.f.rows() == 2);
  CHECK(a.f.cols() == 0);
  CHECK(a.kept.empty());

  CleanedInstance b =
      clean_identity_columns(pm(kBig, {{{1}, {}}, {{}, {0, 1}}}), pm(kBig, {{{}, {1}}}));
  CHECK(b.m == pm(kBig, {{{0, 1}}}));
  CHECK(b.f == pm(kBig, {{{1}}}));
  CHECK(b.kept == std::vector<std::size_t>{1});

  CleanedInstance c = clean_identity_columns(kH, pm(kBig, {{{1}, {}}}));
  CHECK(c.m == kH);
  CHECK(c.kept == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(clean_identity_columns(pm(kBig, {{{1}, {}}, {{}, {0, 1}}}),
                                         pm(kBig, {{{1}, {1}}})),
                  PreconditionError);
}

TEST_CASE("relations with known minimal degree") {
  const auto x2 = pm(kBig, {{{0, 0, 1}}});
  CHECK(known_degree_relations(x2, pm(kBig, {{{1}}}), {0}, {2}) == x2);
  CHECK(known_degree_relations(x2, pm(kBig, {{{1}}, {{0, 1}}}), {0, 0}, {1, 1}) ==
        pm(kBig, {{{0, 1}, {-1}}, {{}, {0, 1}}}));
  CHECK(known_degree_relations(kH, PolyMat(kBig, 3, 2), {1, 2, 3}, {0, 0, 0}) ==
        PolyMat::identity(kBig, 3));
}

TEST_CASE("relations modulo Hermite forms: examples") {
  SelfCheck on;
  CHECK(relations_mod_hermite(kH, pm(kBig, {{{1}, {}}}), {0}) == pm(kBig, {{{0, 0, 1}}}));
  CHECK(relations_mod_hermite(kH, PolyMat(kBig, 2, 2), {0, 0}) == PolyMat::identity(kBig, 2));
  CHECK(relations_mod_hermite(pm(kBig, {{{0, 0, 1}}}), pm(kBig, {{{1}}, {{0, 1}}}), {0, 0}) ==
        pm(kBig, {{{0, 1}, {-1}}, {{}, {0, 1}}}));

  HermiteSplit sp = relations_mod_hermite_split(kH, pm(kBig, {{{1}, {}}}), {0});
  CHECK(sp.p1 == pm(kBig, {{{0, 1}}}));
  CHECK(sp.p2 == pm(kBig, {{{0, 1}}}));
  CHECK(sp.delta1 == std::vector<std::int64_t>{1});
  CHECK(sp.basis == pm(kBig, {{{0, 0, 1}}}));

  CHECK_THROWS_AS(relations_mod_hermite(pm(kBig, {{{0, 1}, {0, 1}}, {{}, {0, 1}}}),
                                        pm(kBig, {{{1}, {}}}), {0}),
                  PreconditionError);
  CHECK_THROWS_AS(relations_mod_hermite(pm(kBig, {{{1}, {}}, {{}, {0, 1}}}),
                                        pm(kBig, {{{}, {1}}}), {0}),
                  PreconditionError);
  CHECK_THROWS_AS(relations_mod_hermite(kH, pm(kBig, {{{0, 1}, {}}}), {0}), PreconditionError);
  CHECK_THROWS_AS(relations_mod_hermite(kH, pm(kBig, {{{1}, {}}}), {0, 0}), ShapeError);
}

TEST_CASE("relations modulo Hermite forms agree with the other routes") {
  SelfCheck on;
  Rng rng(2024);
  for (const Field* f : {&kSmall, &kBig}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = uniform(rng, 1, 4), m = uniform(rng, 1, 5);
      const auto diag = random_composition(n, uniform_signed(rng, static_cast<std::int64_t>(n), 14), rng);
      PolyMat h = random_hermite(*f, diag, rng);
      PolyMat fm = random_below(*f, m, diag, rng);
      Shift s = random_shift(m, -5, 5, rng);
      PolyMat p = relations_mod_hermite(h, fm, s);
      CHECK(p == relations_from_linear_algebra(coefficient_embedding(fm, diag),
                                               multiplication_matrix(h), s));
      CHECK(p == relations_via_kernel(h, fm, s));
      CHECK(oracle::verify_relation_basis(p, h, fm, s));
      Shift moved = s;
      for (auto& x : moved) x -= 11;
      CHECK(relations_mod_hermite(h, fm, moved) == p);
      CHECK(known_degree_relations(h, fm, s, diagonal_degrees(p)) == p);
    }
  }
}

TEST_CASE("Hermite form") {
  CHECK(hermite_form(kH) == kH);
  CHECK(hermite_form(pm(kBig, {{{0, 1}, {}}, {{1}, {1}}})) == pm(kBig, {{{1}, {1}}, {{}, {0, 1}}}));
  CHECK(hermite_form(pm(kBig, {{{1, 1}, {0, 1}}, {{0, 1}, {0, 1}}})) ==
        pm(kBig, {{{1}, {}}, {{}, {0, 1}}}));
  CHECK_THROWS_AS(hermite_form(pm(kBig, {{{0, 1}, {0, 1}}, {{1}, {1}}})), PreconditionError);
  CHECK_THROWS_AS(hermite_form(PolyMat(kBig, 1, 2)), ShapeError);

  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = uniform(rng, 1, 4);
    PolyMat m = random_polymat(kSmall, n, n, 4, rng);
    if (oracle::determinant(m).is_zero()) continue;
    PolyMat h = hermite_form(m);
    CHECK(is_hermite(h));
    CHECK(hermite_form(matmul(random_unimodular(kSmall, n, rng), m)) == h);
    CHECK(oracle::determinant(h) == oracle::determinant(m).monic());
  }
}

TEST_CASE("Popov form") {
  SelfCheck on;
  CHECK(popov_form(pm(kBig, {{{1, 1}, {0, 1}}, {{0, 1}, {0, 1}}}), {0, 0}) ==
        pm(kBig, {{{1}, {}}, {{}, {0, 1}}}));
  const auto p = pm(kBig, {{{0, 1}, {-1}}, {{}, {0, 1}}});
  CHECK(popov_form(p, {0, 0}) == p);
  Rng rng(9);
  CHECK(popov_form(random_unimodular(kBig, 3, rng), {4, 0, -2}) == PolyMat::identity(kBig, 3));
  CHECK_THROWS_AS(popov_form(pm(kBig, {{{0, 1}, {0, 1}}, {{1}, {1}}}), {0, 0}),
                  PreconditionError);

  for (int t = 0; t < 30; ++t) {
    const std::size_t n = uniform(rng, 1, 4);
    PolyMat m = random_polymat(kSmall, n, n, uniform_signed(rng, 1, 5), rng);
    Poly det = oracle::determinant(m);
    if (det.is_zero()) continue;
    Shift s = random_shift(n, -4, 4, rng);
    PolyMat q = popov_form(m, s);
    CHECK(is_popov(q, s));
    CHECK(oracle::determinant(q) == det.monic());
    CHECK(popov_form(q, s) == q);
    CHECK(popov_form(matmul(random_unimodular(kSmall, n, rng), m), s) == q);
    for (std::size_t i = 0; i < n; ++i) CHECK(reduce_vector_mod_rowspace(m.row(i), q, s).is_zero());
  }
}

TEST_CASE("general relation bases") {
  SelfCheck on;
  CHECK(relation_basis_general(PolyMat::identity(kBig, 2), pm(kBig, {{{1}, {3}}, {{0, 1}, {}}}),
                               {0, 0}) == PolyMat::identity(kBig, 2));
  CHECK(relation_basis_general(pm(kBig, {{{0, 0, 1}}}), pm(kBig, {{{1}}, {{0, 1}}}), {0, 0}) ==
        pm(kBig, {{{0, 1}, {-1}}, {{}, {0, 1}}}));
  Rng rng(6);
  for (int t = 0; t < 5; ++t) {
    PolyMat u = random_unimodular(kBig, 2, rng);
    CHECK(relation_basis_general(matmul(u, kH), pm(kBig, {{{1}, {}}}), {0}) ==
          pm(kBig, {{{0, 0, 1}}}));
  }
  CHECK_THROWS_AS(relation_basis_general(pm(kBig, {{{0, 1}, {0, 1}}, {{1}, {1}}}),
                                         pm(kBig, {{{1}, {}}}), {0}),
                  PreconditionError);

  for (int t = 0; t < 30; ++t) {
    const std::size_t n = uniform(rng, 1, 3), m = uniform(rng, 1, 4);
    PolyMat mm = random_polymat(kSmall, n, n, 3, rng);
    if (oracle::determinant(mm).is_zero()) continue;
    PolyMat f = random_polymat(kSmall, m, n, 6, rng);  // not reduced
    Shift s = random_shift(m, -3, 3, rng);
    PolyMat p = relation_basis_general(mm, f, s);
    CHECK(oracle::verify_relation_basis(p, mm, f, s));
  }
}
