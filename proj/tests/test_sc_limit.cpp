#include <cmath>

#include "doctest.h"
#include "sphrect/modulus.hpp"
#include "sphrect/sc_limit.hpp"

using namespace sphrect;

TEST_CASE("degenerate limit for the simplest family") {
  auto sols = limit_modulus_sc_solutions(AngleQuadruple(0, 1, 0, 1));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].K == doctest::Approx(0.7094598).epsilon(1e-6));
  CHECK(sols[0].residual < 1e-9);
  CHECK(sols[0].poles.empty());
}

TEST_CASE("closure function signs around the (0,1,0,1) root") {
  AngleQuadruple q(0, 1, 0, 1);
  double w_lo = sc_closure(q, 0, 0, 1.15);
  double w_hi = sc_closure(q, 0, 0, 1.30);
  CHECK(w_lo > 0.0);
  CHECK(w_hi < 0.0);
}

TEST_CASE("degenerate limits for (1,2,1,2): two solutions") {
  auto sols = limit_modulus_sc_solutions(AngleQuadruple(1, 2, 1, 2));
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].K == doctest::Approx(0.5433144).epsilon(1e-6));
  CHECK(sols[1].K == doctest::Approx(1.193606).epsilon(1e-6));
}

TEST_CASE("degenerate limit for (1,3,1,3): residue-free pole pairs") {
  auto sols = limit_modulus_sc_solutions(AngleQuadruple(1, 3, 1, 3));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].K == doctest::Approx(0.4173).epsilon(2e-3));
  REQUIRE(sols[0].poles.size() == 4);
  double b = sols[0].b;
  // one pole per side: (-inf,0), (0,1), (1,b), (b,inf)
  CHECK(sols[0].poles[0] < 0.0);
  CHECK(sols[0].poles[1] > 0.0);
  CHECK(sols[0].poles[1] < 1.0);
  CHECK(sols[0].poles[2] > 1.0);
  CHECK(sols[0].poles[2] < b);
  CHECK(sols[0].poles[3] > b);
  // half-turn symmetry sigma(z) = (z-b)/(z-1) pairs them
  auto sigma = [&](double z) { return (z - b) / (z - 1.0); };
  CHECK(sigma(sols[0].poles[2]) == doctest::Approx(sols[0].poles[0]).epsilon(1e-7));
  CHECK(sigma(sols[0].poles[1]) == doctest::Approx(sols[0].poles[3]).epsilon(1e-7));
}

TEST_CASE("unsupported structures are reported, not guessed") {
  // delta half-integer: no degenerate-SC representation here
  CHECK_THROWS(limit_modulus_sc_solutions(AngleQuadruple(0, 2, 0, 1)));
  // delta <= -1 requires relabeling first
  CHECK_THROWS(limit_modulus_sc_solutions(AngleQuadruple(1, 0, 1, 0)));
  // special with delta >= 2 integer: mixed structures not pinned down
  CHECK_THROWS(limit_modulus_sc_solutions(AngleQuadruple(0, 2, 0, 4)));
}
