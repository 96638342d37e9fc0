#pragma once

namespace sphrect {

// Conformal modulus K of the quadruple (0,1,a,inf): the half-plane maps to
// the rectangle (0,1,1+iK,iK) with a0 -> 0. Quadrature value, cross-checked
// against the AGM elliptic-integral form.
double modulus(double a);

double modulus_agm(double a);
double modulus_quadrature(double a);

// a with modulus(a) = K
double inverse_modulus(double K);

}  // namespace sphrect
