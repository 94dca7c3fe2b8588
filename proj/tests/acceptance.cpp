// Acceptance run: one line per criterion, nonzero exit if a gating one fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "polyrel/approximant.hpp"
#include "polyrel/division.hpp"
#include "polyrel/linalg_base.hpp"
#include "polyrel/oracle.hpp"
#include "polyrel/relations.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::int64_t total(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

const Field& pick_field(Rng& rng) { return uniform(rng, 0, 1) ? kBig : kSmall; }

// Criteria 1 and 2 share their instances.
struct DivisionStats {
  int instances = 0, mismatches = 0, identity_failures = 0, bound_checked = 0,
      bound_violations = 0;
  double seconds = 0;
};

DivisionStats run_division() {
  DivisionStats st;
  Rng rng(1001);
  auto t0 = Clock::now();
  for (int t = 0; t < 500; ++t) {
    const Field& f = pick_field(rng);
    const std::size_t n = uniform(rng, 1, 4), m = uniform(rng, 1, 6);
    std::vector<std::int64_t> sigma(n);
    for (auto& s : sigma) s = uniform_signed(rng, 0, 20);
    PolyMat mm;
    if (t % 4 == 3) {
      mm = random_hermite(f, sigma, rng);
    } else {
      mm = random_column_reduced(f, sigma, rng);
    }
    const std::int64_t delta = uniform_signed(rng, 1, 12);
    std::vector<std::int64_t> bounds(sigma);
    for (auto& b : bounds) b += delta;
    PolyMat fm = random_below(f, m, bounds, rng);
    QuoRem fast = pm_quorem(mm, fm, delta);
    QuoRem slow = oracle::naive_quorem(mm, fm);
    ++st.instances;
    if (!(fast.quotient == slow.quotient) || !(fast.remainder == slow.remainder)) ++st.mismatches;
    if (!(matmul(fast.quotient, mm) + fast.remainder == fm) ||
        !all_less(cdeg(fast.remainder), cdeg(mm))) {
      ++st.identity_failures;
    }
    ++st.bound_checked;
    if (!(fast.quotient.degree() < delta)) ++st.bound_violations;
  }
  st.seconds = seconds_since(t0);
  return st;
}

Outcome residual_criterion() {
  Rng rng(2002);
  int bad = 0;
  auto t0 = Clock::now();
  for (int t = 0; t < 300; ++t) {
    const Field& f = pick_field(rng);
    const std::size_t n = uniform(rng, 1, 4), m = uniform(rng, 1, 6), k = uniform(rng, 1, 4);
    std::vector<std::int64_t> sigma(n);
    for (auto& s : sigma) s = uniform_signed(rng, 1, 10);
    PolyMat mm = random_column_reduced(f, sigma, rng);
    PolyMat fm = random_below(f, m, sigma, rng);
    const std::int64_t avg = uniform_signed(rng, 1, 6);
    std::vector<std::int64_t> pd(m);
    for (auto& d : pd) d = uniform_signed(rng, 0, avg) + 1;
    pd[uniform(rng, 0, m - 1)] = uniform_signed(rng, avg, 10 * avg) + 1;
    PolyMat p = random_below(f, k, pd, rng);
    if (!(residual(mm, p, fm) == oracle::naive_quorem(mm, matmul(p, fm)).remainder)) ++bad;
  }
  const double s = seconds_since(t0);
  return {bad == 0 && s < 60,
          "300 instances, " + std::to_string(bad) + " mismatches, " + std::to_string(s) + " s"};
}

struct HermiteInstance {
  PolyMat h, f;
  Shift s;
  std::int64_t d;
};

HermiteInstance random_instance(Rng& rng, std::size_t nmax, std::int64_t dmax, std::size_t mmax,
                                std::size_t nmin = 1) {
  const Field& f = pick_field(rng);
  const std::size_t n = uniform(rng, nmin, nmax), m = uniform(rng, 1, mmax);
  const auto d = uniform_signed(rng, static_cast<std::int64_t>(n), dmax);
  const auto diag = random_composition(n, d, rng);
  PolyMat h = random_hermite(f, diag, rng);
  return {h, random_below(f, m, diag, rng), random_shift(m, -5, 5, rng), d};
}

Outcome agreement_criterion() {
  Rng rng(3003);
  int disagree = 0, unverified = 0;
  auto t0 = Clock::now();
  for (int t = 0; t < 200; ++t) {
    HermiteInstance in = random_instance(rng, 4, 12, 5);
    PolyMat a = relations_mod_hermite(in.h, in.f, in.s);
    PolyMat b = relations_from_linear_algebra(coefficient_embedding(in.f, diagonal_degrees(in.h)),
                                              multiplication_matrix(in.h), in.s);
    PolyMat c = relations_via_kernel(in.h, in.f, in.s);
    if (!(a == b) || !(a == c)) ++disagree;
    if (!oracle::verify_relation_basis(a, in.h, in.f, in.s)) ++unverified;
  }
  const double s = seconds_since(t0);
  return {disagree == 0 && unverified == 0 && s < 120,
          "200 instances, " + std::to_string(disagree) + " disagreements, " +
              std::to_string(unverified) + " failed verification, " + std::to_string(s) + " s"};
}

Outcome contract_criterion() {
  Rng rng(4004);
  int not_popov = 0, not_annihilating = 0, too_big = 0, incomplete = 0;
  for (int t = 0; t < 100; ++t) {
    HermiteInstance in = random_instance(rng, 4, 40, 5);
    PolyMat p = relations_mod_hermite(in.h, in.f, in.s);
    if (!is_popov(p, in.s)) ++not_popov;
    if (!oracle::annihilates(p, in.h, in.f)) ++not_annihilating;
    if (total(diagonal_degrees(p)) > in.d) ++too_big;
    for (const PolyMat& v : oracle::brute_force_relations(in.h, in.f, in.d)) {
      if (!reduce_vector_mod_rowspace(v, p, in.s).is_zero()) {
        ++incomplete;
        break;
      }
    }
  }
  const int bad = not_popov + not_annihilating + too_big + incomplete;
  return {bad == 0, "100 instances; failures: popov " + std::to_string(not_popov) +
                        ", annihilation " + std::to_string(not_annihilating) + ", degree " +
                        std::to_string(too_big) + ", completeness " + std::to_string(incomplete)};
}

Outcome popov_criterion() {
  Rng rng(5005);
  int done = 0, bad = 0;
  while (done < 100) {
    const Field& f = pick_field(rng);
    const std::size_t n = uniform(rng, 1, 5);
    PolyMat m = random_polymat(f, n, n, uniform_signed(rng, 1, 9), rng);
    const Poly det = oracle::determinant(m);
    if (det.is_zero()) continue;
    ++done;
    Shift s = random_shift(n, -5, 5, rng);
    PolyMat p = popov_form(m, s);
    bool ok = is_popov(p, s) && oracle::determinant(p) == det.monic() && popov_form(p, s) == p &&
              popov_form(matmul(random_unimodular(f, n, rng), m), s) == p;
    const std::int64_t d = det.degree().value() + 1;
    Shift stair(n);
    for (std::size_t i = 0; i < n; ++i) stair[i] = d * static_cast<std::int64_t>(n - i);
    ok = ok && popov_form(m, stair) == hermite_form(m);
    if (!ok) ++bad;
  }
  return {bad == 0, "100 matrices, " + std::to_string(bad) + " failures"};
}

Outcome split_criterion() {
  Rng rng(6006);
  int bad = 0;
  for (int t = 0; t < 60; ++t) {
    HermiteInstance in = random_instance(rng, 5, 30, 5, 2);
    HermiteSplit sp = relations_mod_hermite_split(in.h, in.f, in.s);
    PolyMat prod = matmul(sp.p2, sp.p1);
    PolyMat id = PolyMat::identity(in.h.field(), prod.rows());
    bool ok = !oracle::determinant(prod).is_zero();
    for (std::size_t i = 0; ok && i < prod.rows(); ++i) {
      ok = reduce_vector_mod_rowspace(prod.row(i), sp.basis, in.s).is_zero();
    }
    ok = ok && oracle::annihilates(prod, sp.basis, id) && oracle::annihilates(sp.basis, prod, id);
    ok = ok && sp.basis == relations_mod_hermite(in.h, in.f, in.s);
    if (!ok) ++bad;
  }
  return {bad == 0, "60 instances, " + std::to_string(bad) + " failures"};
}

Outcome scaling_criterion() {
  Rng rng(7007);
  std::string detail;
  double prev = 0, worst = 0;
  for (std::int64_t d : {64, 128, 256, 512}) {
    PolyMat h = random_hermite(kBig, random_composition(4, d, rng), rng);
    PolyMat f = random_below(kBig, 4, diagonal_degrees(h), rng);
    Shift s(4, 0);
    // Best of several runs; single runs at small D last a few milliseconds.
    double sec = 1e30;
    for (int rep = 0; rep < 7; ++rep) {
      auto t0 = Clock::now();
      PolyMat p = relations_mod_hermite(h, f, s);
      sec = std::min(sec, seconds_since(t0));
    }
    detail += "D=" + std::to_string(d) + ": " + std::to_string(sec) + " s; ";
    if (prev > 0) worst = std::max(worst, sec / prev);
    prev = sec;
  }
  detail += "worst ratio " + std::to_string(worst);
  return {worst <= 3.0, detail};
}

}  // namespace

int main() {
  int gating_failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o, bool gating = true) {
    std::printf("[%s] criterion %d: %s (%s)%s\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str(), gating ? "" : " [informational]");
    std::fflush(stdout);
    if (!o.pass && gating) ++gating_failures;
  };

  DivisionStats ds = run_division();
  report(1, "division matches the naive oracle",
         {ds.mismatches == 0 && ds.identity_failures == 0 && ds.seconds < 30,
          std::to_string(ds.instances) + " instances, " + std::to_string(ds.mismatches) +
              " mismatches, " + std::to_string(ds.identity_failures) + " identity failures, " +
              std::to_string(ds.seconds) + " s"});
  report(2, "quotient degree bound",
         {ds.bound_violations == 0, std::to_string(ds.bound_checked) + " instances, " +
                                        std::to_string(ds.bound_violations) + " violations"});
  report(3, "residual with unbalanced multipliers", residual_criterion());
  report(4, "three-way canonical agreement", agreement_criterion());
  report(5, "relation basis contract", contract_criterion());
  report(6, "Popov form pipeline", popov_criterion());
  report(7, "divide-and-conquer consistency", split_criterion());
  report(8, "scaling in D", scaling_criterion(), false);
  return gating_failures == 0 ? 0 : 1;
}
