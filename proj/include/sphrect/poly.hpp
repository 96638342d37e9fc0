#pragma once

#include <complex>
#include <vector>

namespace sphrect {

using cplx = std::complex<double>;

// Dense real polynomial, coeff[j] * z^j.
using Poly = std::vector<double>;

int degree(const Poly& p);
Poly ptrim(Poly p);
Poly padd(const Poly& a, const Poly& b);
Poly psub(const Poly& a, const Poly& b);
Poly pmul(const Poly& a, const Poly& b);
Poly pscale(const Poly& a, double s);
Poly pderiv(const Poly& a);
double peval(const Poly& a, double x);
cplx peval(const Poly& a, cplx z);

// All complex roots by Weierstrass (Durand-Kerner) iteration with Newton
// polish; conjugate pairs are symmetrized for real input.
std::vector<cplx> roots(const Poly& p);

}  // namespace sphrect
