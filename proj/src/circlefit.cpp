#include "sphrect/circlefit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sphrect/linalg.hpp"

namespace sphrect {

double GenCircle::radius() const {
  if (A == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(std::abs(D * D + E * E - 4.0 * A * F)) / (2.0 * std::abs(A));
}

std::complex<double> GenCircle::center() const {
  if (A == 0.0) return {0.0, 0.0};
  return {-D / (2.0 * A), -E / (2.0 * A)};
}

GenCircle fit_circle(const std::vector<std::complex<double>>& pts) {
  if (pts.size() < 3) throw std::invalid_argument("fit_circle: need >= 3 points");
  std::size_t n = pts.size();

  // line through the point cloud (total least squares)
  double mx = 0, my = 0;
  for (const auto& p : pts) {
    mx += p.real();
    my += p.imag();
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  double spread = 0;
  for (const auto& p : pts) {
    double x = p.real() - mx, y = p.imag() - my;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    spread = std::max(spread, std::hypot(x, y));
  }
  // smaller eigenvector of the 2x2 scatter = line normal
  double tr = sxx + syy, det = sxx * syy - sxy * sxy;
  double lam = 0.5 * tr - std::sqrt(std::max(0.25 * tr * tr - det, 0.0));
  double nx, ny;
  if (std::abs(sxy) > 1e-300) {
    nx = lam - syy;
    ny = sxy;
  } else if (sxx <= syy) {
    nx = 1.0;
    ny = 0.0;
  } else {
    nx = 0.0;
    ny = 1.0;
  }
  double nn = std::hypot(nx, ny);
  nx /= nn;
  ny /= nn;
  GenCircle line{0.0, nx, ny, -(nx * mx + ny * my)};
  double line_res = fit_residual(line, pts);
  if (line_res <= 1e-9 * (spread > 0 ? spread : 1.0)) return line;

  // Kasa fit: minimize sum (x^2+y^2 + Dx + Ey + F)^2
  Mat m(3, 3);
  std::vector<double> rhs(3, 0.0);
  for (const auto& p : pts) {
    double x = p.real(), y = p.imag(), s = x * x + y * y;
    m(0, 0) += x * x; m(0, 1) += x * y; m(0, 2) += x;
    m(1, 0) += x * y; m(1, 1) += y * y; m(1, 2) += y;
    m(2, 0) += x;     m(2, 1) += y;     m(2, 2) += 1.0;
    rhs[0] -= s * x;
    rhs[1] -= s * y;
    rhs[2] -= s;
  }
  std::vector<double> def;
  if (!solve_dense(m, rhs, def)) return line;
  double cx = -def[0] / 2.0, cy = -def[1] / 2.0;
  double r2 = cx * cx + cy * cy - def[2];
  if (r2 <= 0) return line;
  double r = std::sqrt(r2);

  // geometric refinement (Gauss-Newton on center and radius)
  for (int it = 0; it < 12; ++it) {
    Mat jtj(3, 3);
    std::vector<double> jtr(3, 0.0);
    for (const auto& p : pts) {
      double dx = p.real() - cx, dy = p.imag() - cy;
      double d = std::hypot(dx, dy);
      if (d < 1e-300) continue;
      double e = d - r;
      double g[3] = {-dx / d, -dy / d, -1.0};
      for (int a2 = 0; a2 < 3; ++a2) {
        jtr[static_cast<std::size_t>(a2)] -= g[a2] * e;
        for (int b = 0; b < 3; ++b) jtj(a2, b) += g[a2] * g[b];
      }
    }
    std::vector<double> step;
    if (!solve_dense(jtj, jtr, step)) break;
    cx += step[0];
    cy += step[1];
    r += step[2];
    if (std::abs(step[0]) + std::abs(step[1]) + std::abs(step[2]) <
        1e-14 * (1.0 + r))
      break;
  }

  GenCircle c{1.0, -2.0 * cx, -2.0 * cy, cx * cx + cy * cy - r * r};
  double disc = std::sqrt(std::abs(c.D * c.D + c.E * c.E - 4.0 * c.A * c.F));
  c.A /= disc;
  c.D /= disc;
  c.E /= disc;
  c.F /= disc;
  return c;
}

double fit_residual(const GenCircle& c, const std::vector<std::complex<double>>& pts) {
  double worst = 0.0;
  for (const auto& p : pts) {
    double x = p.real(), y = p.imag();
    double d;
    if (c.is_line()) {
      d = std::abs(c.D * x + c.E * y + c.F) / std::hypot(c.D, c.E);
    } else {
      d = std::abs(std::abs(p - c.center()) - c.radius());
    }
    worst = std::max(worst, d);
  }
  return worst;
}

double circle_cos_angle(const GenCircle& a, const GenCircle& b) {
  double o12 = a.D * b.D + a.E * b.E - 2.0 * a.A * b.F - 2.0 * b.A * a.F;
  double o11 = a.D * a.D + a.E * a.E - 4.0 * a.A * a.F;
  double o22 = b.D * b.D + b.E * b.E - 4.0 * b.A * b.F;
  return o12 / std::sqrt(o11 * o22);
}

}  // namespace sphrect
