#include "sphrect/modulus.hpp"

#include <cmath>
#include <stdexcept>

#include "sphrect/quadrature.hpp"

namespace sphrect {

double modulus_quadrature(double a) {
  if (!(a > 1.0)) throw std::invalid_argument("modulus: requires a > 1");
  QuadResult j1 = tanh_sinh(
      [&](double t, double dlo, double dhi) {
        return cplx(1.0 / std::sqrt(dlo * dhi * (a - t)), 0.0);
      },
      0.0, 1.0, 1e-13, 12);
  QuadResult j2 = tanh_sinh(
      [&](double t, double dlo, double dhi) {
        return cplx(1.0 / std::sqrt(t * dlo * dhi), 0.0);
      },
      1.0, a, 1e-13, 12);
  return j2.value.real() / j1.value.real();
}

double modulus_agm(double a) {
  if (!(a > 1.0)) throw std::invalid_argument("modulus: requires a > 1");
  // int_0^1 = (2/sqrt(a)) K(m=1/a), int_1^a = (2/sqrt(a)) K(m=1-1/a),
  // K(m) = pi / (2 agm(1, sqrt(1-m)))
  return agm(1.0, std::sqrt(1.0 - 1.0 / a)) / agm(1.0, std::sqrt(1.0 / a));
}

double modulus(double a) {
  double q = modulus_quadrature(a);
  double g = modulus_agm(a);
  if (std::abs(q - g) > 1e-10 * (1.0 + std::abs(g)))
    throw std::runtime_error("modulus: quadrature and AGM disagree");
  return q;
}

double inverse_modulus(double K) {
  if (!(K > 0.0)) throw std::invalid_argument("inverse_modulus: K > 0");
  double lo = 1.0 + 1e-15, hi = 2.0;
  while (modulus_agm(hi) < K) {
    hi = 1.0 + (hi - 1.0) * 4.0;
    if (hi > 1e300) throw std::runtime_error("inverse_modulus: overflow");
  }
  // bisection on the monotone map a -> K(a)
  for (int it = 0; it < 200; ++it) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid == lo || mid == hi) break;
    if (modulus_agm(mid) < K) lo = mid;
    else hi = mid;
    if ((hi - lo) < 1e-14 * hi) break;
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace sphrect
