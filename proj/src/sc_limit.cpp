#include "sphrect/sc_limit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <array>

#include "sphrect/modulus.hpp"
#include "sphrect/quadrature.hpp"

namespace sphrect {

namespace {

struct ClosureCtx {
  double e0, e1, e2;
  int J;
  double b;
  std::vector<double> tay;  // Taylor coefficients of h at b, many terms

  double h(double t) const { return std::pow(t, e0) * std::pow(t - 1.0, e1); }

  // (t-b)^e2 * [h(t) - sum_{j<=J} tay_j (t-b)^j] for t > b. Near b the
  // Taylor tail is factored so only (t-b)^(e2+J+1) = (t-b)^(-1/2) appears.
  double weighted_remainder(double t, double d) const {
    double rho = b - 1.0;
    if (d < 0.3 * rho) {
      double s = 0.0, dj = 1.0;
      for (std::size_t j = static_cast<std::size_t>(J) + 1; j < tay.size(); ++j) {
        s += tay[j] * dj;
        dj *= d;
      }
      return std::pow(d, e2 + J + 1) * s;
    }
    double poly = 0.0, dj = 1.0;
    for (int j = 0; j <= J; ++j) {
      poly += tay[static_cast<std::size_t>(j)] * dj;
      dj *= d;
    }
    return std::pow(d, e2) * (h(t) - poly);
  }
};

ClosureCtx make_ctx(const AngleQuadruple& q, int w0, int w2, double b) {
  ClosureCtx c;
  c.e0 = -q[0] - 1.5 - w0;
  c.e1 = q[1] - 0.5;
  c.e2 = -q[2] - 1.5 - w2;
  c.J = q[2] + w2;
  c.b = b;
  int nterms = c.J + 70;
  c.tay.assign(static_cast<std::size_t>(nterms) + 1, 0.0);
  c.tay[0] = c.h(b);
  // normalized derivatives of u = h'/h = e0/z + e1/(z-1) at b
  std::vector<double> v(static_cast<std::size_t>(nterms) + 1);
  double pb = b, pb1 = b - 1.0;
  double sgn = 1.0;
  for (int i = 0; i <= nterms; ++i) {
    v[static_cast<std::size_t>(i)] = sgn * (c.e0 / pb + c.e1 / pb1);
    pb *= b;
    pb1 *= (b - 1.0);
    sgn = -sgn;
  }
  for (int j = 0; j < nterms; ++j) {
    double s = 0.0;
    for (int i = 0; i <= j; ++i)
      s += c.tay[static_cast<std::size_t>(j - i)] * v[static_cast<std::size_t>(i)];
    c.tay[static_cast<std::size_t>(j + 1)] = s / (j + 1);
  }
  return c;
}

}  // namespace

double sc_closure(const AngleQuadruple& q, int w0, int w2, double b) {
  if (!(b > 1.0)) throw std::invalid_argument("sc_closure: b > 1 required");
  ClosureCtx c = make_ctx(q, w0, w2, b);

  double split = 2.0 * b;
  QuadResult near_q = tanh_sinh(
      [&](double t, double dlo, double) {
        return cplx(c.weighted_remainder(t, dlo), 0.0);
      },
      b, split, 1e-12, 11);
  // tail via t = 1/u; the integrand behaves like u^{-1/2} at u = 0, and the
  // piece below u ~ 1e-60 contributes under 1e-30 of the total
  QuadResult far_q = tanh_sinh(
      [&](double u, double, double) {
        if (u < 1e-60) return cplx(0.0, 0.0);
        double t = 1.0 / u;
        return cplx(c.weighted_remainder(t, t - b) / (u * u), 0.0);
      },
      0.0, 1.0 / split, 1e-12, 11);
  return near_q.value.real() + far_q.value.real();
}

namespace {

// Non-special symmetric case (A,B,A,B), delta = 2: the developing-map
// derivative keeps the corner exponents and carries four residue-free
// double poles, one per side, in two orbits of the rectangle's half-turn
// symmetry sigma(z) = (z-b)/(z-1): t1 = sigma(t3) < 0, t2 in (0,1),
// t3 in (1,b), t4 = sigma(t2) > b. Unknowns (b, t2, t3); conditions:
// vanishing residues at t2 and t3 (the sigma partners follow), and the
// limiting real-period condition FP int_0^1 R dt = 0.
struct PoleSystem {
  double e0, e1, e2;  // corner exponents alpha_j - 1
  double b;

  std::array<double, 4> poles(double t2, double t3) const {
    double t1 = (t3 - b) / (t3 - 1.0);
    double t4 = (t2 - b) / (t2 - 1.0);
    return {t1, t2, t3, t4};
  }

  // log-derivative of (z-t_i)^2 R at t_i (vanishes iff residue-free)
  double G(int i, double t2, double t3) const {
    auto ts = poles(t2, t3);
    double t = ts[static_cast<std::size_t>(i)];
    double s = e0 / t + e1 / (t - 1.0) + e2 / (t - b);
    for (int k = 0; k < 4; ++k)
      if (k != i) s -= 2.0 / (t - ts[static_cast<std::size_t>(k)]);
    return s;
  }

  // Newton in the scaled unknowns (t2, y) with t3 = 1 + y (b-1); the second
  // equation is rescaled by b-1 so both residuals are O(1)
  bool solve_poles(double& t2, double& t3) const {
    double eps = b - 1.0;
    double x = t2, y = (t3 - 1.0) / eps;
    auto F1 = [&](double xx, double yy) { return G(1, xx, 1.0 + yy * eps); };
    auto F2 = [&](double xx, double yy) {
      return eps * G(2, xx, 1.0 + yy * eps);
    };
    bool converged = false;
    for (int it = 0; it < 80; ++it) {
      double f1 = F1(x, y), f2 = F2(x, y);
      const double h = 1e-7;
      double j11 = (F1(x + h, y) - f1) / h;
      double j12 = (F1(x, y + h) - f1) / h;
      double j21 = (F2(x + h, y) - f2) / h;
      double j22 = (F2(x, y + h) - f2) / h;
      double det = j11 * j22 - j12 * j21;
      if (det == 0.0 || !std::isfinite(det)) return false;
      double dx = (f1 * j22 - f2 * j12) / det;
      double dy = (f2 * j11 - f1 * j21) / det;
      double damp = 1.0;
      while (damp > 1e-6 && (x - damp * dx <= 0.0 || x - damp * dx >= 1.0 ||
                             y - damp * dy <= 0.0 || y - damp * dy >= 1.0))
        damp *= 0.5;
      if (damp <= 1e-6) return false;
      x -= damp * dx;
      y -= damp * dy;
      if (std::abs(dx) * damp < 1e-12 && std::abs(dy) * damp < 1e-12) {
        converged = true;
        break;
      }
    }
    if (!converged &&
        !(std::abs(F1(x, y)) < 1e-8 && std::abs(F2(x, y)) < 1e-8))
      return false;
    if (!(std::abs(F1(x, y)) < 1e-6 && std::abs(F2(x, y)) < 1e-6)) return false;
    t2 = x;
    t3 = 1.0 + y * eps;
    return true;
  }

  // finite part of int_0^1 R dt across the residue-free double pole at t2
  double closure(double t2, double t3) const {
    auto ts = poles(t2, t3);
    auto logd = [&](double t, int n) {
      // L^(n)(t)/(n-1)! * (-1)^(n-1) pattern folded in explicitly
      double s0 = e0 / std::pow(t, n) + e1 / std::pow(t - 1.0, n) +
                  e2 / std::pow(t - b, n);
      double sp = 0.0;
      for (int k = 0; k < 4; ++k)
        if (k != 1) sp += 1.0 / std::pow(t - ts[static_cast<std::size_t>(k)], n);
      return s0 - 2.0 * sp;
    };
    auto h = [&](double t, double d0, double d1) {
      // (t-t2)^2 R with stable distances d0 = t, d1 = 1 - t
      double n = std::pow(d0, e0) * std::pow(d1, e1) * std::pow(b - t, e2);
      double d = 1.0;
      for (int k = 0; k < 4; ++k)
        if (k != 1) d *= (t - ts[static_cast<std::size_t>(k)]) *
                         (t - ts[static_cast<std::size_t>(k)]);
      return n / d;
    };
    double gap = std::min({t2, 1.0 - t2, t3 - t2});
    double A = h(t2, t2, 1.0 - t2);
    double L2 = -logd(t2, 2), L3 = 2.0 * logd(t2, 3);
    auto reg = [&](double t, double d0, double d1) {
      double d = t - t2;
      if (std::abs(d) < 1e-4 * gap)
        return cplx(A * (0.5 * L2 + d * L3 / 6.0), 0.0);
      return cplx((h(t, d0, d1) - A) / (d * d), 0.0);
    };
    QuadResult left = tanh_sinh(
        [&](double t, double dlo, double dhi) {
          return reg(t, dlo, (1.0 - t2) + dhi);
        },
        0.0, t2, 1e-12, 11);
    QuadResult right = tanh_sinh(
        [&](double t, double dlo, double dhi) {
          return reg(t, t2 + dlo, dhi);
        },
        t2, 1.0, 1e-12, 11);
    double fp = left.value.real() + right.value.real() -
                A * (1.0 / (1.0 - t2) + 1.0 / t2);
    return fp;
  }
};

std::vector<ScSolution> sc_pole_pair_solutions(const AngleQuadruple& q) {
  PoleSystem sys;
  sys.e0 = q[0] - 0.5;
  sys.e1 = q[1] - 0.5;
  sys.e2 = q[2] - 0.5;
  std::vector<ScSolution> out;
  const int n = 260;
  const double s_lo = -10.5, s_hi = 4.0;
  double t2 = 0.5, t3 = 0.0;
  bool warm = false, have_prev = false;
  double prev_b = 0.0, prev_f = 0.0, prev_t2 = 0.5, prev_t3 = 0.0;
  for (int i = 0; i < n; ++i) {
    double b = 1.0 + std::exp(s_lo + (s_hi - s_lo) * i / (n - 1));
    sys.b = b;
    bool ok = false;
    if (warm) {
      double w3 = (prev_t3 - 1.0) / ((prev_b - 1.0));
      t2 = prev_t2;
      t3 = 1.0 + w3 * (b - 1.0);
      ok = sys.solve_poles(t2, t3);
    }
    if (!ok) {
      for (double s2 : {0.5, 0.3, 0.7, 0.12, 0.88}) {
        for (double w3 : {0.8, 0.5, 0.3, 0.95}) {
          t2 = s2;
          t3 = 1.0 + w3 * (b - 1.0);
          if (sys.solve_poles(t2, t3)) {
            ok = true;
            break;
          }
        }
        if (ok) break;
      }
    }
    if (!ok) {
      have_prev = false;
      warm = false;
      continue;
    }
    warm = true;
    double f = sys.closure(t2, t3);
    if (have_prev && ((prev_f < 0 && f > 0) || (prev_f > 0 && f < 0))) {
      // bisect in b, re-solving the pole positions at each midpoint
      double x1 = prev_b, x2 = b, f1 = prev_f;
      double u2 = prev_t2, u3 = prev_t3, v2 = t2, v3 = t3;
      double xm = b, t2m = t2, t3m = t3;
      for (int it = 0; it < 60; ++it) {
        xm = 0.5 * (x1 + x2);
        sys.b = xm;
        t2m = 0.5 * (u2 + v2);
        t3m = 1.0 + 0.5 * ((u3 - 1.0) / (x1 - 1.0) + (v3 - 1.0) / (x2 - 1.0)) *
                        (xm - 1.0);
        if (!sys.solve_poles(t2m, t3m)) break;
        double fm = sys.closure(t2m, t3m);
        if ((fm < 0) == (f1 < 0)) {
          x1 = xm;
          f1 = fm;
          u2 = t2m;
          u3 = t3m;
        } else {
          x2 = xm;
          v2 = t2m;
          v3 = t3m;
        }
        if (std::abs(x2 - x1) < 1e-12 * xm) break;
      }
      ScSolution sol;
      sol.b = xm;
      sol.K = modulus(xm);
      sys.b = xm;
      auto ts = sys.poles(t2m, t3m);
      sol.poles.assign(ts.begin(), ts.end());
      sol.residual = std::abs(sys.closure(t2m, t3m));
      out.push_back(sol);
    }
    prev_b = b;
    prev_f = f;
    prev_t2 = t2;
    prev_t3 = t3;
    have_prev = true;
  }
  return out;
}

}  // namespace

std::vector<ScSolution> limit_modulus_sc_solutions(const AngleQuadruple& q) {
  int td = q.two_delta();
  if (td % 2 != 0)
    throw std::invalid_argument(
        "degenerate-SC method needs an integer delta (even sum of A_j)");
  if (td < 2)
    throw std::invalid_argument(
        "degenerate-SC method needs delta >= 1 (relabel_marking first)");

  if (!is_special(q)) {
    // non-special: the Darboux poles survive the limit as residue-free
    // double poles of f'
    if (q[0] == q[2] && q[1] == q[3] && td == 4 && q.sum() == 8)
      return sc_pole_pair_solutions(q);
    throw std::invalid_argument(
        "degenerate-SC method: pole structure implemented only for the "
        "symmetric delta=2 case; use the extrapolation method");
  }
  if (td != 2)
    throw std::invalid_argument(
        "degenerate-SC method: special quadruples handled for delta = 1 "
        "(full corner absorption); use the extrapolation method");

  std::vector<std::pair<int, int>> wraps = {{0, 0}};
  std::vector<ScSolution> out;
  for (auto [w0, w2] : wraps) {
    const int n = 320;
    const double s_lo = -11.5, s_hi = 5.2;
    double prev_b = 0.0, prev_w = 0.0;
    bool have_prev = false;
    for (int i = 0; i < n; ++i) {
      double s = s_lo + (s_hi - s_lo) * i / (n - 1);
      double b = 1.0 + std::exp(s);
      double w;
      try {
        w = sc_closure(q, w0, w2, b);
      } catch (const std::exception&) {
        have_prev = false;
        continue;
      }
      if (have_prev && ((prev_w < 0 && w > 0) || (prev_w > 0 && w < 0))) {
        double x1 = prev_b, x2 = b, f1 = prev_w, f2 = w;
        double scale = std::max(std::abs(f1), std::abs(f2));
        double xm = 0.5 * (x1 + x2), fm = f1;
        for (int it = 0; it < 80; ++it) {
          double xs = x2 - f2 * (x2 - x1) / (f2 - f1);
          if (!(xs > std::min(x1, x2) && xs < std::max(x1, x2)))
            xs = 0.5 * (x1 + x2);
          double fs = sc_closure(q, w0, w2, xs);
          xm = xs;
          fm = fs;
          if (std::abs(fs) <= 1e-13 * scale) break;
          if ((fs < 0) == (f1 < 0)) {
            x1 = xs;
            f1 = fs;
          } else {
            x2 = xs;
            f2 = fs;
          }
          if (std::abs(x2 - x1) < 1e-13 * x2) break;
        }
        ScSolution sol;
        sol.b = xm;
        sol.K = modulus(xm);
        sol.residual = std::abs(fm) / (scale > 0 ? scale : 1.0);
        out.push_back(sol);
      }
      prev_b = b;
      prev_w = w;
      have_prev = true;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ScSolution& a, const ScSolution& b) { return a.K < b.K; });
  std::vector<ScSolution> dedup;
  for (const auto& s : out) {
    if (!dedup.empty() && std::abs(s.b - dedup.back().b) < 1e-7 * s.b) continue;
    dedup.push_back(s);
  }
  return dedup;
}

}  // namespace sphrect
