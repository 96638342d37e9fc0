#include "sphrect/periods.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <stdexcept>
#include <limits>

#include "sphrect/quadrature.hpp"

namespace sphrect {

DevelopingIntegral make_integral(const AngleQuadruple& A, double a,
                                 double lambda) {
  DevelopingIntegral di;
  di.par = HeunParams{A, a, lambda};
  di.dp = darboux_product(A, a, lambda);
  residues_and_normalize(di.dp, di.par);
  if (di.dp.status != DarbouxStatus::Ok)
    throw std::runtime_error(std::string("darboux: ") +
                             to_string(di.dp.status) + " (" + di.dp.note + ")");
  di.z0 = 0.5 * (1.0 + a);
  return di;
}

cplx integrand(const DevelopingIntegral& di, cplx zeta) {
  const double bp[3] = {0.0, 1.0, di.par.a};
  cplx prod = 1.0;
  for (int j = 0; j < 3; ++j)
    prod *= upower(zeta - bp[j], di.par.alpha(j) - 1.0);
  cplx pv = di.dp.P_at(zeta);
  if (pv == cplx(0.0)) throw std::runtime_error("integrand at a root of P");
  return prod / pv;
}

namespace {

// Real-axis evaluation on a subinterval (plo,phi). Distances to the three
// branch points and to the chart center are assembled from dlo/dhi plus
// exact endpoint offsets, so that near-coincident singular points (a -> 1)
// cost no cancellation.
struct AxisPiece {
  const DevelopingIntegral* di;
  double plo, phi;

  double stable_diff(double target, double x, double dlo, double dhi) const {
    if (target <= plo) return dlo + (plo - target);
    if (target >= phi) return -(dhi + (target - phi));
    return x - target;
  }

  cplx eval(double x, double dlo, double dhi) const {
    const double bp[3] = {0.0, 1.0, di->par.a};
    cplx prod = 1.0;
    for (int j = 0; j < 3; ++j)
      prod *= upower_real(stable_diff(bp[j], x, dlo, dhi),
                          di->par.alpha(j) - 1.0);
    double off1 = stable_diff(1.0, x, dlo, dhi);
    return prod / di->dp.real_P_at_off1(off1);
  }
};

}  // namespace

PeriodValue integrate_real(const DevelopingIntegral& di, double x_from,
                           double x_to, const PeriodOptions& opt) {
  PeriodValue out;
  if (!(x_from < x_to)) {
    if (x_from == x_to) {
      out.ok = true;
      return out;
    }
    PeriodValue flip = integrate_real(di, x_to, x_from, opt);
    flip.value = -flip.value;
    return flip;
  }
  double len = x_to - x_from;

  // real roots of P strictly inside
  std::vector<std::pair<double, cplx>> inner;
  for (std::size_t i = 0; i < di.dp.roots.size(); ++i) {
    const cplx& r = di.dp.roots[i];
    if (r.imag() != 0.0) continue;
    if (r.real() > x_from && r.real() < x_to)
      inner.emplace_back(r.real(), di.dp.residues[i]);
  }
  std::sort(inner.begin(), inner.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  double rad = opt.detour_radius;
  if (rad <= 0.0) {
    rad = 1e-3 * len;
    double lim = len;
    double prev = x_from;
    for (const auto& [r, res] : inner) {
      lim = std::min(lim, r - prev);
      prev = r;
    }
    lim = std::min(lim, x_to - prev);
    rad = std::min(rad, 0.35 * lim);
    if (rad <= 0.0) rad = 1e-6 * len;
  }
  {
    double prev = x_from;
    for (const auto& [r, res] : inner) {
      if (r - prev < rad) {
        out.error = "root of P within detour radius of " + std::to_string(prev);
        return out;
      }
      prev = r;
    }
    if (!inner.empty() && x_to - inner.back().first < rad) {
      out.error = "root of P within detour radius of endpoint";
      return out;
    }
  }

  cplx total = 0.0;
  double err = 0.0;
  bool all_conv = true;
  double cursor = x_from;
  auto straight = [&](double lo, double hi) {
    if (hi - lo <= 0.0) return;
    AxisPiece piece{&di, lo, hi};
    QuadResult q = tanh_sinh(
        [&](double x, double dlo, double dhi) { return piece.eval(x, dlo, dhi); },
        lo, hi, opt.rel_tol, opt.max_level);
    total += q.value;
    err += q.err;
    all_conv = all_conv && q.converged;
  };
  for (const auto& [r, res] : inner) {
    straight(cursor, r - rad);
    // upper semicircle, left to right: phi from pi to 0
    QuadResult q = tanh_sinh(
        [&](double phi, double, double) {
          cplx z = r + rad * std::polar(1.0, phi);
          return integrand(di, z) * cplx(0.0, 1.0) * rad * std::polar(1.0, phi);
        },
        0.0, M_PI, opt.rel_tol, opt.max_level);
    total -= q.value;  // orientation pi -> 0
    err += q.err;
    all_conv = all_conv && q.converged;
    out.pole_detours.emplace_back(r, cplx(0.0, -M_PI) * res);
    cursor = r + rad;
  }
  straight(cursor, x_to);

  out.value = total;
  out.err = err;
  out.ok = all_conv;
  if (!all_conv) out.error = "quadrature did not converge";
  return out;
}

PeriodValue period(const DevelopingIntegral& di, Segment seg,
                   const PeriodOptions& opt) {
  if (seg == Segment::Seg01) return integrate_real(di, 0.0, 1.0, opt);
  return integrate_real(di, 1.0, di.par.a, opt);
}

double default_scan_halfwidth(const AngleQuadruple& A, double a) {
  double s = 1.0 + A.sum();
  return 10.0 * (1.0 + a) * s * s;
}

// Near the confluent limit a -> 1 the accessory parameter stays bounded
// around alpha'alpha''; the default window narrows accordingly (it would be
// unresolvable at the global width) but keeps an O(sum A) floor.
std::pair<double, double> default_scan_range(const AngleQuadruple& A,
                                             double a) {
  double eps = a - 1.0;
  if (eps < 0.08) {
    HeunParams par{A, a, 0.0};
    double c = par.alpha_prime() * par.alpha_dprime();
    double s = 1.0 + A.sum();
    double w = std::max(25.0 * eps * s * s, 1.5 * s);
    return {c - w, c + w};
  }
  double w = default_scan_halfwidth(A, a);
  return {-w, w};
}

std::vector<double> scan_values(const AngleQuadruple& A, double a,
                                const std::vector<double>& lambdas,
                                const PeriodOptions& opt, ExecMode mode,
                                ScanLog* log) {
  std::vector<double> g(lambdas.size(),
                        std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> errs(lambdas.size());
  parallel_for(lambdas.size(), mode, [&](std::size_t i) {
    try {
      DevelopingIntegral di = make_integral(A, a, lambdas[i]);
      PeriodValue p = period(di, Segment::Seg01, opt);
      if (p.ok || p.error.empty()) g[i] = p.value.real();
      else errs[i] = p.error;
    } catch (const std::exception& e) {
      errs[i] = e.what();
    }
  });
  if (log) {
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      if (!errs[i].empty()) {
        log->skipped.push_back(lambdas[i]);
        log->messages.push_back("lambda=" + std::to_string(lambdas[i]) + ": " +
                                errs[i]);
      }
  }
  return g;
}

namespace {

double eval_g(const AngleQuadruple& A, double a, double lambda,
              const PeriodOptions& opt, bool* ok) {
  try {
    DevelopingIntegral di = make_integral(A, a, lambda);
    PeriodValue p = period(di, Segment::Seg01, opt);
    if (!p.error.empty() && !p.ok) {
      *ok = false;
      return 0.0;
    }
    *ok = true;
    return p.value.real();
  } catch (const std::exception&) {
    *ok = false;
    return 0.0;
  }
}

}  // namespace

std::vector<UnitaryRoot> solve_lambda(const AngleQuadruple& A, double a,
                                      const ScanConfig& cfg, ScanLog* log) {
  double lo = cfg.lo, hi = cfg.hi;
  if (lo == hi) std::tie(lo, hi) = default_scan_range(A, a);
  int n = std::max(cfg.grid, 16);
  std::vector<double> ls(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    ls[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  std::vector<double> g = scan_values(A, a, ls, cfg.period_opts, cfg.mode, log);

  // Zeros often sit close to a jump of g (a root of P crossing a contour
  // endpoint) in a dip narrower than the grid; sub-scan cells whose values
  // dip well below the typical magnitude, and cells bordering failures.
  {
    std::vector<double> mags;
    for (double v : g)
      if (!std::isnan(v)) mags.push_back(std::abs(v));
    if (mags.size() > 8) {
      std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
      double med = mags[mags.size() / 2];
      std::vector<double> ls2;
      for (int i = 0; i + 1 < n; ++i) {
        double g1 = g[static_cast<std::size_t>(i)],
               g2 = g[static_cast<std::size_t>(i + 1)];
        bool nan1 = std::isnan(g1), nan2 = std::isnan(g2);
        bool dip = (!nan1 && std::abs(g1) < 0.1 * med) ||
                   (!nan2 && std::abs(g2) < 0.1 * med);
        bool sign_change = !nan1 && !nan2 &&
                           ((g1 < 0 && g2 > 0) || (g1 > 0 && g2 < 0));
        if ((dip || nan1 != nan2) && !sign_change) {
          for (int k = 1; k < 32; ++k)
            ls2.push_back(ls[static_cast<std::size_t>(i)] +
                          (ls[static_cast<std::size_t>(i + 1)] -
                           ls[static_cast<std::size_t>(i)]) *
                              k / 32.0);
        }
      }
      if (!ls2.empty()) {
        std::vector<double> g2v =
            scan_values(A, a, ls2, cfg.period_opts, cfg.mode, log);
        for (std::size_t k = 0; k < ls2.size(); ++k) {
          ls.push_back(ls2[k]);
          g.push_back(g2v[k]);
        }
        std::vector<std::size_t> idx(ls.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t x, std::size_t y) { return ls[x] < ls[y]; });
        std::vector<double> ls_s, g_s;
        for (std::size_t k : idx) {
          ls_s.push_back(ls[k]);
          g_s.push_back(g[k]);
        }
        ls = std::move(ls_s);
        g = std::move(g_s);
        n = static_cast<int>(ls.size());
      }
    }
  }

  std::vector<UnitaryRoot> roots_out;
  for (int i = 0; i + 1 < n; ++i) {
    double g1 = g[static_cast<std::size_t>(i)], g2 = g[static_cast<std::size_t>(i + 1)];
    if (std::isnan(g1) || std::isnan(g2)) continue;
    if (g1 == 0.0) g1 = -0.0;  // treat exact zeros through the bracket path
    if (!((g1 < 0.0 && g2 > 0.0) || (g1 > 0.0 && g2 < 0.0))) continue;
    double x1 = ls[static_cast<std::size_t>(i)], x2 = ls[static_cast<std::size_t>(i + 1)];
    double f1 = g1, f2 = g2;
    double scale = std::max({1.0, std::abs(f1), std::abs(f2)});
    double xm = 0.5 * (x1 + x2), fm = f1;
    for (int it = 0; it < 90; ++it) {
      // secant proposal, bisection fallback
      double xs = x2 - f2 * (x2 - x1) / (f2 - f1);
      if (!(xs > std::min(x1, x2) && xs < std::max(x1, x2)))
        xs = 0.5 * (x1 + x2);
      bool ok = false;
      double fs = eval_g(A, a, xs, cfg.period_opts, &ok);
      if (!ok) {
        xs = 0.5 * (x1 + x2);
        fs = eval_g(A, a, xs, cfg.period_opts, &ok);
        if (!ok) break;
      }
      xm = xs;
      fm = fs;
      if (std::abs(fs) <= cfg.root_tol * scale) break;
      if ((fs < 0) == (f1 < 0)) {
        x1 = xs;
        f1 = fs;
      } else {
        x2 = xs;
        f2 = fs;
      }
      if (std::abs(x2 - x1) < 1e-14 * (1.0 + std::abs(x1))) break;
    }
    // a bracket that refuses to converge is a jump of g (a root of P
    // crossing a contour endpoint), not a zero
    if (std::abs(fm) > 1e4 * cfg.root_tol * scale) {
      if (log)
        log->messages.push_back("dropped non-converging bracket near lambda=" +
                                std::to_string(xm));
      continue;
    }
    UnitaryRoot r;
    r.a = a;
    r.lambda = xm;
    r.residual = std::abs(fm) / scale;
    r.bracket_lo = x1;
    r.bracket_hi = x2;
    bool unitary = true;
    try {
      DevelopingIntegral di = make_integral(A, a, xm);
      r.p01 = period(di, Segment::Seg01, cfg.period_opts).value;
      r.p1a = period(di, Segment::Seg1a, cfg.period_opts).value;
      // a vanishing real period with complex residue phases is not a
      // unitary point (residue loops then carry real periods)
      for (const auto& rs : di.dp.residues)
        if (std::abs(rs.imag()) > 1e-6) unitary = false;
    } catch (const std::exception&) {
    }
    if (!unitary) {
      if (log)
        log->messages.push_back("dropped non-unitary zero at lambda=" +
                                std::to_string(xm) +
                                " (complex residue phases)");
      continue;
    }
    roots_out.push_back(r);
  }
  std::sort(roots_out.begin(), roots_out.end(),
            [](const UnitaryRoot& x, const UnitaryRoot& y) {
              return x.lambda < y.lambda;
            });
  std::vector<UnitaryRoot> dedup;
  for (const auto& r : roots_out) {
    if (!dedup.empty() &&
        std::abs(r.lambda - dedup.back().lambda) < 1e-9 * (1.0 + std::abs(r.lambda)))
      continue;
    dedup.push_back(r);
  }
  return dedup;
}

}  // namespace sphrect
