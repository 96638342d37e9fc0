#include <cmath>

#include "doctest.h"
#include "sphrect/families.hpp"
#include "sphrect/modulus.hpp"

using namespace sphrect;

TEST_CASE("theta estimate at the exact algebraic point") {
  // (1/2,3/2,1/2,3/2) at a = 9/8, lambda = -5/8: theta = 1/2 exactly
  DevelopingIntegral di = make_integral(AngleQuadruple(0, 1, 0, 1), 9.0 / 8.0,
                                        -0.625);
  auto th = theta_estimate(di, 0.45);
  REQUIRE(th.has_value());
  CHECK(*th == doctest::Approx(0.5).epsilon(1e-7));

  ThetaDiagnostics diag;
  auto th2 = theta_estimate_full(di, 0.45, &diag);
  REQUIRE(th2.has_value());
  // images of L1 and L3 are orthogonal to the circle carrying L2
  CHECK(std::abs(diag.cosCCp) < 1e-6);
  CHECK(std::abs(diag.cosCCpp) < 1e-6);
}

TEST_CASE("theta moves monotonically on the (0,1,0,1) branch") {
  AngleQuadruple q(0, 1, 0, 1);
  std::optional<double> prev;
  double last = 0.0;
  for (double a : {1.02, 1.06, 1.10, 1.14}) {
    auto roots = solve_lambda(q, a, ScanConfig{});
    REQUIRE(roots.size() == 1);
    DevelopingIntegral di = make_integral(q, a, roots[0].lambda);
    auto th = theta_estimate(di, prev);
    REQUIRE(th.has_value());
    CHECK(*th > last);
    last = *th;
    prev = th;
  }
}

TEST_CASE("trace the single (0,1,0,1) branch") {
  AngleQuadruple q(0, 1, 0, 1);
  auto curves = trace_all_branches(q, TraceConfig{});
  REQUIRE(curves.size() == 1);
  const FamilyCurve& c = curves[0];
  CHECK_FALSE(c.lost);
  CHECK(c.monotone_intervals == 1);
  CHECK(c.small_a_end == EndBehavior::ModulusToZero);
  REQUIRE(c.points.size() > 8);
  // ordered by a; K matches modulus(a) by construction
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
    CHECK(c.points[i].a < c.points[i + 1].a);
  // theta increases into the K_crit end
  REQUIRE(c.points.back().theta.has_value());
  CHECK(*c.points.back().theta > 0.99);
  CHECK(*c.points.front().theta < 0.1);

  LimitResult lr = limit_modulus_extrapolate(c);
  CHECK(lr.K_crit == doctest::Approx(0.7094598).epsilon(1e-5));
  CHECK(lr.err < 1e-4);
}

TEST_CASE("mirror family") {
  AngleQuadruple q(0, 1, 0, 1);
  FamilyCurve c = trace_branch(q, 0, TraceConfig{});
  FamilyCurve m = mirror_family(c);
  CHECK(m.derived_mirror);
  CHECK(m.small_a_end == EndBehavior::ModulusToInfinity);
  REQUIRE(m.points.size() == c.points.size());
  // modulus reciprocal pointwise, a -> a/(a-1), still ordered by a
  for (std::size_t i = 0; i + 1 < m.points.size(); ++i)
    CHECK(m.points[i].a < m.points[i + 1].a);
  double K_last_orig = c.points.back().K;
  bool found = false;
  for (const auto& p : m.points)
    if (std::abs(p.K - 1.0 / K_last_orig) < 1e-12) found = true;
  CHECK(found);
  CHECK(m.K_crit_est == doctest::Approx(1.0 / c.K_crit_est));

  // involution
  FamilyCurve mm = mirror_family(m);
  CHECK_FALSE(mm.derived_mirror);
  CHECK(mm.points.front().K ==
        doctest::Approx(c.points.front().K).epsilon(1e-12));

  // mirrored a positions carry the reciprocal modulus exactly
  for (const auto& p : m.points)
    CHECK(modulus(p.a) == doctest::Approx(p.K).epsilon(1e-9));
}

TEST_CASE("trace_branch rejects out-of-range branch indices") {
  CHECK_THROWS(trace_branch(AngleQuadruple(0, 1, 0, 1), 4, TraceConfig{}));
  CHECK_THROWS(trace_branch(AngleQuadruple(1, 0, 1, 0), 0, TraceConfig{}));
}
