#include "sphrect/heun.hpp"

#include <cmath>
#include <stdexcept>

namespace sphrect {

namespace {

void fill_chart_polys(HeunCoefficients& h, double lam_chart) {
  h.D = pmul(pmul(Poly{-h.pos[0], 1.0}, Poly{-h.pos[1], 1.0}),
             Poly{-h.pos[2], 1.0});
  h.Np = {};
  for (int j = 0; j < 3; ++j) {
    Poly t{1.0};
    for (int kk = 0; kk < 3; ++kk)
      if (kk != j) t = pmul(t, Poly{-h.pos[kk], 1.0});
    h.Np = padd(h.Np, pscale(t, 1.0 - h.expo[static_cast<std::size_t>(j)]));
  }
  h.Nq = {-lam_chart, h.par.alpha_prime() * h.par.alpha_dprime()};
}

}  // namespace

HeunCoefficients build_heun(const AngleQuadruple& A, double a, double lambda) {
  if (!(a > 1.0)) throw std::invalid_argument("build_heun: requires a > 1");
  HeunCoefficients h;
  h.par = HeunParams{A, a, lambda};
  h.center = 0.0;
  h.scale = 1.0;
  h.pos = {0.0, 1.0, a};
  h.expo = {h.par.alpha(0), h.par.alpha(1), h.par.alpha(2)};
  fill_chart_polys(h, lambda);
  return h;
}

HeunCoefficients build_heun_auto(const AngleQuadruple& A, double a,
                                 double lambda) {
  if (!(a > 1.0)) throw std::invalid_argument("build_heun: requires a > 1");
  double eps = a - 1.0;
  if (eps >= 1.0) return build_heun(A, a, lambda);
  HeunCoefficients h;
  h.par = HeunParams{A, a, lambda};
  h.center = 1.0;
  h.scale = eps;
  h.pos = {-1.0 / eps, 0.0, 1.0};
  h.expo = {h.par.alpha(0), h.par.alpha(1), h.par.alpha(2)};
  double apad = h.par.alpha_prime() * h.par.alpha_dprime();
  fill_chart_polys(h, (lambda - apad) / eps);
  return h;
}

Mat hermite_matrix(const HeunCoefficients& h, int d) {
  // clear denominators with D^2:
  //   D^2 w''' + 3 Np D w''
  // + (Np' D - Np D' + 2 Np^2 + 4 Nq D) w'
  // + (4 Np Nq + 2 (Nq' D - Nq D')) w = 0
  Poly c3 = pmul(h.D, h.D);
  Poly c2 = pscale(pmul(h.Np, h.D), 3.0);
  Poly c1 = padd(padd(psub(pmul(pderiv(h.Np), h.D), pmul(h.Np, pderiv(h.D))),
                      pscale(pmul(h.Np, h.Np), 2.0)),
                 pscale(pmul(h.Nq, h.D), 4.0));
  Poly c0 = padd(pscale(pmul(h.Np, h.Nq), 4.0),
                 pscale(psub(pmul(pderiv(h.Nq), h.D), pmul(h.Nq, pderiv(h.D))),
                        2.0));

  Mat m(d + 4, d + 1);
  auto acc = [&](const Poly& c, int shift, double fac, int col) {
    if (fac == 0.0) return;
    for (std::size_t j = 0; j < c.size(); ++j) {
      int row = static_cast<int>(j) + shift;
      if (row >= 0 && row < m.rows) m(row, col) += fac * c[j];
    }
  };
  for (int k = 0; k <= d; ++k) {
    double kk = k;
    acc(c3, k - 3, kk * (kk - 1) * (kk - 2), k);
    acc(c2, k - 2, kk * (kk - 1), k);
    acc(c1, k - 1, kk, k);
    acc(c0, k, 1.0, k);
  }
  return m;
}

cplx upower(cplx w, double gamma) {
  double r = std::abs(w);
  if (r == 0.0) return 0.0;
  double ph = std::arg(w);
  if (w.imag() == 0.0 && w.real() < 0.0) ph = M_PI;
  return std::polar(std::pow(r, gamma), gamma * ph);
}

cplx upower_real(double w, double gamma) {
  if (w > 0.0) return std::pow(w, gamma);
  if (w == 0.0) return 0.0;
  return std::polar(std::pow(-w, gamma), gamma * M_PI);
}

}  // namespace sphrect
