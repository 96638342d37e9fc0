#pragma once

#include <complex>

#include "sphrect/angles.hpp"
#include "sphrect/linalg.hpp"
#include "sphrect/poly.hpp"

namespace sphrect {

// Normalized singular points (a0,a1,a2,a3) = (0,1,a,inf), a in (1,inf);
// exponent at corner j is alpha_j = A_j + 1/2 half-turns.
struct HeunParams {
  AngleQuadruple A;
  double a = 2.0;
  double lambda = 0.0;

  double alpha(int j) const { return A[j] + 0.5; }
  double alpha_prime() const {
    return 0.5 * (2.0 + alpha(3) - alpha(2) - alpha(1) - alpha(0));
  }
  double alpha_dprime() const {
    return 0.5 * (2.0 - alpha(3) - alpha(2) - alpha(1) - alpha(0));
  }
};

// y'' + (Np/D) y' + (Nq/D) y = 0 with D = prod_j (w - s_j),
// Np = sum_j (1-alpha_j) prod_{k!=j}(w - s_k), Nq = alpha'alpha'' w - lam.
// The generic form covers the standard chart w = z, s = (0,1,a), and the
// rescaled chart w = (z-1)/(a-1) used near the confluent limit a -> 1,
// where s = (-1/(a-1), 0, 1) and lam = (lambda - alpha'alpha'')/(a-1).
struct HeunCoefficients {
  HeunParams par;
  double center = 0.0, scale = 1.0;  // z = center + scale * w
  std::array<double, 3> pos{0.0, 1.0, 2.0};   // singular points in w
  std::array<double, 3> expo{0.5, 0.5, 0.5};  // alpha_j at pos[j]
  Poly D, Np, Nq;
};

HeunCoefficients build_heun(const AngleQuadruple& A, double a, double lambda);

// chart chosen by the distance a-1; threshold where the z-chart operator
// turns ill-conditioned
HeunCoefficients build_heun_auto(const AngleQuadruple& A, double a,
                                 double lambda);

// Matrix of the third-order operator w''' + 3pw'' + (p'+2p^2+4q)w' +
// (4pq+2q')w, cleared by D^2, acting on polynomials of degree <= d.
// Rows are coefficients of z^0..z^{d+3}.
Mat hermite_matrix(const HeunCoefficients& h, int d);

// Power with the branch fixed for contours approaching the real axis from
// the upper half-plane: arguments in (-pi, pi], negative reals get +pi.
cplx upower(cplx w, double gamma);
cplx upower_real(double w, double gamma);

}  // namespace sphrect
