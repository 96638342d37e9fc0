#include <cmath>
#include <random>
#include <tuple>

#include "doctest.h"
#include "sphrect/darboux.hpp"
#include "sphrect/periods.hpp"

using namespace sphrect;

TEST_CASE("heun parameters") {
  HeunParams h{AngleQuadruple(0, 1, 0, 1), 2.0, 0.0};
  CHECK(h.alpha_prime() == doctest::Approx(0.5));
  CHECK(h.alpha_dprime() == doctest::Approx(-1.0));
  HeunParams half{AngleQuadruple(0, 0, 0, 0), 2.0, 0.0};
  CHECK(half.alpha_prime() == doctest::Approx(0.5));
  CHECK(half.alpha_dprime() == doctest::Approx(0.0));
  CHECK_THROWS(build_heun(AngleQuadruple(0, 1, 0, 1), 0.9, 0.0));
}

TEST_CASE("p has simple poles exactly at 0, 1, a") {
  HeunCoefficients h = build_heun(AngleQuadruple(1, 2, 1, 2), 1.7, 0.3);
  for (double s : {0.0, 1.0, 1.7}) {
    CHECK(std::abs(peval(h.D, s)) < 1e-14);
    CHECK(std::abs(peval(h.Np, s)) > 1e-6);  // generic: no cancellation
  }
  CHECK(degree(h.D) == 3);
  CHECK(degree(h.Np) == 2);
}

TEST_CASE("darboux polynomial degree and residual") {
  for (auto [q, a, lam] : {std::tuple{AngleQuadruple(0, 1, 0, 1), 1.8, -0.4},
                           std::tuple{AngleQuadruple(1, 2, 1, 2), 2.3, 1.0},
                           std::tuple{AngleQuadruple(1, 3, 1, 3), 1.9, 2.2}}) {
    HeunCoefficients h = build_heun(q, a, lam);
    DarbouxPolynomial dp = darboux_polynomial(h, q.sum());
    REQUIRE(dp.status == DarbouxStatus::Ok);
    CHECK(dp.deg == q.sum());
    CHECK(dp.nullity == 1);
    CHECK(hermite_residual(h, dp.P) < 1e-12);
  }
}

TEST_CASE("nullspace dimension is one for random samples") {
  std::mt19937 gen(12345);
  std::uniform_real_distribution<double> ua(1.1, 6.0), ul(-25.0, 25.0);
  for (auto q : {AngleQuadruple(0, 1, 0, 1), AngleQuadruple(1, 2, 1, 2)}) {
    int anomalies = 0;
    const int N = 200;
    for (int it = 0; it < N; ++it) {
      HeunCoefficients h = build_heun(q, ua(gen), ul(gen));
      DarbouxPolynomial dp = darboux_polynomial(h, q.sum());
      if (dp.status != DarbouxStatus::Ok || dp.nullity != 1) {
        ++anomalies;
        MESSAGE("anomaly: ", to_string(dp.status), " ", dp.note);
      }
    }
    CHECK(anomalies <= N / 100);
  }
}

TEST_CASE("residues on the unitary branch normalize to +-1") {
  AngleQuadruple q(0, 1, 0, 1);
  double a = 1.1;
  auto roots = solve_lambda(q, a, ScanConfig{});
  REQUIRE(roots.size() == 1);
  DevelopingIntegral di = make_integral(q, a, roots[0].lambda);
  REQUIRE(di.dp.residues.size() == 2);
  double re_sorted[2] = {di.dp.residues[0].real(), di.dp.residues[1].real()};
  if (re_sorted[0] > re_sorted[1]) std::swap(re_sorted[0], re_sorted[1]);
  CHECK(re_sorted[0] == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(re_sorted[1] == doctest::Approx(1.0).epsilon(1e-8));
  for (const auto& r : di.dp.residues)
    CHECK(std::abs(r.imag()) < 1e-8);
  // magnitudes pairwise equal before normalization is reflected by scale_c
  CHECK(di.dp.scale_c > 0.0);

  // scaling linearity: double the polynomial, residues halve
  DarbouxPolynomial dp2 = di.dp;
  dp2.lead *= 2.0;
  HeunParams par{q, a, roots[0].lambda};
  Poly dummy;  // residues recomputed from scratch
  DarbouxPolynomial fresh = darboux_product(q, a, roots[0].lambda);
  fresh.lead *= 2.0;
  residues_and_normalize(fresh, par);
  // normalization absorbs the scaling: residues are +-1 again
  for (const auto& r : fresh.residues)
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-8);
}

TEST_CASE("confluent-regime product form stays accurate") {
  // deg-8 case in the a -> 1 regime that breaks a single-chart solve
  AngleQuadruple q(1, 3, 1, 3);
  DarbouxPolynomial dp = darboux_product(q, 1.006, -1.8468);
  REQUIRE(dp.status == DarbouxStatus::Ok);
  HeunParams par{q, 1.006, -1.8468};
  residues_and_normalize(dp, par);
  REQUIRE(dp.status == DarbouxStatus::Ok);
  CHECK(dp.roots.size() == 8);
  for (const auto& r : dp.residues)
    CHECK(std::abs(r) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("exact algebraic point: a = 9/8 for angles (1/2,3/2,1/2,3/2)") {
  // at theta = 1/2 the developing map is algebraic; the Darboux roots are
  // (3 -+ sqrt 3)/4 and the accessory parameter is -5/8
  AngleQuadruple q(0, 1, 0, 1);
  DevelopingIntegral di = make_integral(q, 9.0 / 8.0, -0.625);
  REQUIRE(di.dp.roots.size() == 2);
  CHECK(di.dp.roots[0].real() ==
        doctest::Approx((3.0 - std::sqrt(3.0)) / 4.0).epsilon(1e-9));
  CHECK(di.dp.roots[1].real() ==
        doctest::Approx((3.0 + std::sqrt(3.0)) / 4.0).epsilon(1e-9));
  PeriodValue p = period(di, Segment::Seg01);
  CHECK(std::abs(p.value.real()) < 1e-9);
}
