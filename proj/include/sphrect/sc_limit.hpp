#pragma once

#include <vector>

#include "sphrect/angles.hpp"

namespace sphrect {

// Degenerate theta -> 1 configurations, solved directly from the
// straight-line developing map f' = C prod_j (z-x_j)^(e_j) / S(z) with
// (x_0,x_1,x_2) = (0,1,b) and its image on three lines (two parallel, one
// orthogonal; their tangency point at infinity). Two structures occur:
//
//  * special quadruples, delta = 1: the Darboux roots are absorbed into
//    the corners mapping to the tangency point, S = 1 and
//    e = (-A0-3/2, A1-1/2, -A2-3/2). The one real closure condition
//    (the finite corner images lie on a common line) reduces to
//      W(b) = int_b^inf (t-b)^e2 [ h(t) - T_J h(t) ] dt = 0,
//    h(t) = t^e0 (t-1)^e1, with the Taylor polynomial T_J of h at b of
//    order J = A2 regularizing the finite-part integral.
//
//  * non-special symmetric quadruples, delta = 2: the corner exponents
//    survive as e_j = A_j - 1/2 and S is the square of a real polynomial
//    whose roots are residue-free double poles of f' (the tangency
//    preimages), in orbits of the half-turn symmetry. Residue-free
//    conditions plus the limiting vanishing-real-period condition pin
//    (b, poles).
//
// Every solution yields K_crit = modulus(b).
struct ScSolution {
  double b = 0.0;
  double K = 0.0;
  std::vector<double> poles;  // real poles of f' (empty for delta = 1)
  double residual = 0.0;
};

double sc_closure(const AngleQuadruple& q, int w0, int w2, double b);

std::vector<ScSolution> limit_modulus_sc_solutions(const AngleQuadruple& q);

}  // namespace sphrect
