#pragma once

#include <complex>
#include <functional>

namespace sphrect {

using cplx = std::complex<double>;

struct QuadResult {
  cplx value{0.0, 0.0};
  double err = 0.0;
  long evals = 0;
  bool converged = false;
};

// Integrand receives the node x together with accurate distances to both
// interval endpoints (x-lo and hi-x), so endpoint-singular factors can be
// evaluated without cancellation.
using SegFn = std::function<cplx(double x, double dlo, double dhi)>;

// tanh-sinh (double exponential) quadrature on [lo, hi]; handles integrable
// endpoint singularities such as (x-lo)^(-1/2).
QuadResult tanh_sinh(const SegFn& f, double lo, double hi, double rel_tol,
                     int max_level = 11);

// arithmetic-geometric mean
double agm(double x, double y);

}  // namespace sphrect
