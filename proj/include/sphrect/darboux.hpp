#pragma once

#include <string>
#include <vector>

#include "sphrect/heun.hpp"

namespace sphrect {

enum class DarbouxStatus {
  Ok,
  RankZero,        // no polynomial nullvector found (numerical failure)
  Degenerate,      // nullspace dimension >= 2
  NonSimpleRoots,  // root collision; residues undefined
  ResidueMismatch  // residue magnitudes disagree beyond tolerance
};

const char* to_string(DarbouxStatus s);

// Real polynomial solution P of the third-order equation satisfied by
// products of Heun solutions, with roots and normalized residues of the
// developing integrand prod (z-a_j)^(alpha_j - 1) / P(z).
struct DarbouxPolynomial {
  DarbouxStatus status = DarbouxStatus::Ok;
  Poly P;                        // coefficients in the chart variable w
  double center = 0.0, scale = 1.0;  // z = center + scale * w
  int deg = 0;
  int nullity = 0;
  double sigma_ratio = 0.0;  // sigma_min / sigma_max of the operator matrix
  std::vector<cplx> roots;       // in z
  std::vector<cplx> residues;    // after normalization, magnitudes 1
  double scale_c = 1.0;          // the common residue magnitude divided out
  std::string note;

  // product representation P(z) = lead * prod_k ((z-1) - root_off[k]):
  // root offsets from z = 1 stay accurate through the confluent limit
  bool product_form = false;
  double lead = 1.0;
  std::vector<cplx> root_off;

  cplx P_at_off1(cplx z_minus_1) const;
  double real_P_at_off1(double z_minus_1) const;
  cplx P_at(cplx z) const { return P_at_off1(z - 1.0); }
  double P_at(double z) const { return real_P_at_off1(z - 1.0); }
};

// Nullspace of the cleared operator on degree <= d polynomials (d should be
// sum A_j); rank decisions use sigma_min/sigma_max < 1e-9.
DarbouxPolynomial darboux_polynomial(const HeunCoefficients& h, int d);

// Full pipeline used by the period machinery: near the confluent limit the
// root set is merged from the z-chart (roots away from the 1,a cluster) and
// the rescaled chart (roots inside it), and P is kept in product form.
DarbouxPolynomial darboux_product(const AngleQuadruple& A, double a,
                                  double lambda);

// Residue of the integrand at each simple root, equal-magnitude check, and
// rescaling of P so the residues have magnitude 1.
void residues_and_normalize(DarbouxPolynomial& dp, const HeunParams& par,
                            double mag_tol = 1e-8);

// residual of P in the third-order equation, relative to coefficient scale
double hermite_residual(const HeunCoefficients& h, const Poly& P);

// monomial coefficients of P in z, expanded from the product form (for
// reporting; evaluation should stay on the product form)
Poly monomial_coefficients(const DarbouxPolynomial& dp);

}  // namespace sphrect
