#pragma once

#include <complex>
#include <vector>

namespace sphrect {

// Generalized circle A(x^2+y^2) + Dx + Ey + F = 0, normalized so that
// D^2 + E^2 - 4AF = 1; A = 0 encodes a straight line.
struct GenCircle {
  double A = 0.0, D = 0.0, E = 0.0, F = 0.0;
  bool is_line() const { return A == 0.0; }
  double radius() const;
  std::complex<double> center() const;
};

// Algebraic fit (line-capable) followed by geometric refinement for proper
// circles. Requires >= 3 points.
GenCircle fit_circle(const std::vector<std::complex<double>>& pts);

// max distance of the points from the fitted curve
double fit_residual(const GenCircle& c, const std::vector<std::complex<double>>& pts);

// cos of an intersection angle (sign depends on equation orientation; the
// two supplementary intersection angles correspond to +-).
double circle_cos_angle(const GenCircle& a, const GenCircle& b);

}  // namespace sphrect
