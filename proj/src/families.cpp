#include "sphrect/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sphrect/circlefit.hpp"
#include "sphrect/modulus.hpp"

namespace sphrect {

namespace {

constexpr double kPi = 3.14159265358979323846;

// cumulative values of I(z) = int_{z0}^z R at the given ascending sample
// points, integrating piecewise from the anchor
std::vector<cplx> cumulative_I(const DevelopingIntegral& di, double anchor,
                               cplx I_anchor, const std::vector<double>& xs,
                               bool ascending, const PeriodOptions& po) {
  std::vector<cplx> out(xs.size());
  cplx cur = I_anchor;
  double from = anchor;
  if (ascending) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      cur += integrate_real(di, from, xs[j], po).value;
      out[j] = cur;
      from = xs[j];
    }
  } else {
    for (std::size_t j = xs.size(); j-- > 0;) {
      cur -= integrate_real(di, xs[j], from, po).value;
      out[j] = cur;
      from = xs[j];
    }
  }
  return out;
}

// direction (mod pi) of a set of points on a line through the origin
bool line_direction(const std::vector<cplx>& I_vals, double& psi,
                    double& coherence) {
  cplx w = 0.0;
  for (const auto& I : I_vals) w += std::polar(1.0, 2.0 * I.imag());
  coherence = std::abs(w) / static_cast<double>(I_vals.size());
  if (coherence < 0.6) return false;
  psi = 0.5 * std::arg(w);
  return true;
}

std::vector<cplx> to_points(const std::vector<cplx>& I_vals) {
  std::vector<cplx> pts;
  pts.reserve(I_vals.size());
  for (const auto& I : I_vals) {
    double re = std::clamp(I.real(), -40.0, 40.0);
    pts.push_back(std::polar(std::exp(re), I.imag()));
  }
  return pts;
}

}  // namespace

std::optional<double> theta_estimate_full(const DevelopingIntegral& di,
                                          std::optional<double> prev,
                                          ThetaDiagnostics* diag) {
  const double a = di.par.a;
  PeriodOptions po;
  po.rel_tol = 1e-10;
  po.max_level = 9;

  // The rotation number of the (1,a)-period resolves which of the two
  // supplementary circle angles is theta: the image of side L2 is an arc of
  // C of length theta*pi plus a half-turn per detoured pole, so theta =
  // Im(pi_1a)/pi up to an integer tracked by continuity along the branch.
  double period_theta;
  {
    PeriodValue p1a = period(di, Segment::Seg1a, po);
    double raw = p1a.value.imag() / kPi;
    double shift = prev ? std::round(raw - *prev) : std::floor(raw);
    period_theta = raw - shift;
  }

  // I at the corners z=1 and z=a, from the base point z0 = (1+a)/2
  cplx I_1, I_a;
  try {
    I_1 = -integrate_real(di, 1.0, di.z0, po).value;
    I_a = integrate_real(di, di.z0, a, po).value;
  } catch (const std::exception&) {
    return std::nullopt;
  }

  const int ns = 16;
  std::vector<double> xs1(ns), xs3(ns);
  for (int j = 0; j < ns; ++j)
    xs1[static_cast<std::size_t>(j)] = 0.06 + 0.88 * (j + 0.5) / ns;
  for (int j = 0; j < ns; ++j)
    xs3[static_cast<std::size_t>(j)] =
        a + (a - 1.0) * 0.08 * (std::pow(1.9, j + 1) - 1.0);

  std::vector<cplx> I_L1, I_L3;
  try {
    I_L1 = cumulative_I(di, 1.0, I_1, xs1, false, po);
    I_L3 = cumulative_I(di, a, I_a, xs3, true, po);
  } catch (const std::exception&) {
    return std::nullopt;
  }

  double psi1, psi3, coh1, coh3;
  if (!line_direction(I_L1, psi1, coh1) || !line_direction(I_L3, psi3, coh3))
    return std::nullopt;

  if (diag) {
    std::vector<double> xs2(ns);
    for (int j = 0; j < ns; ++j)
      xs2[static_cast<std::size_t>(j)] =
          1.0 + (a - 1.0) * (j + 0.5) / ns;
    std::vector<cplx> I_L2 = cumulative_I(di, di.z0, cplx(0.0), xs2, true, po);
    // re-anchor: cumulative_I above walked from z0 only rightward; redo both
    // halves properly
    I_L2.clear();
    for (double x : xs2) {
      cplx v = x >= di.z0 ? integrate_real(di, di.z0, x, po).value
                          : -integrate_real(di, x, di.z0, po).value;
      I_L2.push_back(v);
    }
    GenCircle C = fit_circle(to_points(I_L2));
    GenCircle Cp = fit_circle(to_points(I_L1));
    GenCircle Cpp = fit_circle(to_points(I_L3));
    diag->cosCCp = circle_cos_angle(C, Cp);
    diag->cosCCpp = circle_cos_angle(C, Cpp);
    diag->line_residual_L1 = fit_residual(Cp, to_points(I_L1));
    diag->line_residual_L3 = fit_residual(Cpp, to_points(I_L3));
  }

  double d = std::fmod(psi1 - psi3, kPi);
  if (d < 0) d += kPi;
  double c1 = d / kPi, c2 = 1.0 - d / kPi;
  double geo = std::abs(c1 - period_theta) <= std::abs(c2 - period_theta)
                   ? c1
                   : c2;
  // the circle angle folds at 1/2; if the geometric pick drifted off the
  // rotation number, trust the period
  if (std::abs(geo - period_theta) > 0.05) geo = period_theta;
  return geo;
}

std::optional<double> theta_estimate(const DevelopingIntegral& di,
                                     std::optional<double> prev) {
  return theta_estimate_full(di, prev, nullptr);
}

namespace {

struct LocalRoot {
  bool found = false;
  double lambda = 0.0;
  double residual = 0.0;
  double raw_rotation = 0.0;  // Im(pi_1a)/pi, before branch normalization
};

LocalRoot local_solve(const AngleQuadruple& q, double a, double seed,
                      double window, const TraceConfig& cfg) {
  ScanConfig sc;
  sc.lo = seed - window;
  sc.hi = seed + window;
  sc.grid = cfg.local_grid;
  sc.period_opts = cfg.po;
  sc.mode = cfg.mode;
  LocalRoot out;
  std::vector<UnitaryRoot> roots;
  try {
    roots = solve_lambda(q, a, sc);
  } catch (const std::exception&) {
    return out;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) {
    double d = std::abs(r.lambda - seed);
    if (d < best) {
      best = d;
      out.lambda = r.lambda;
      out.residual = r.residual;
      out.raw_rotation = r.p1a.imag() / kPi;
      out.found = true;
    }
  }
  if (out.found && best > cfg.guard * 2.0 * window) out.found = false;
  return out;
}

int count_monotone_intervals(const std::vector<FamilyPoint>& pts) {
  if (pts.size() < 3) return pts.empty() ? 0 : 1;
  int intervals = 1;
  int dir = 0;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    double d = pts[j].K - pts[j - 1].K;
    double tol = 1e-9 * (std::abs(pts[j].K) + 1.0);
    int s = d > tol ? 1 : (d < -tol ? -1 : 0);
    if (s == 0) continue;
    if (dir != 0 && s != dir) ++intervals;
    dir = s;
  }
  return intervals;
}

struct RawPoint {
  double a, lambda, residual, raw;
};

// chain the rotation number continuously point to point
double chain_raw(double raw, double prev) {
  return raw - std::round(raw - prev);
}

FamilyCurve trace_from(const AngleQuadruple& q, int branch, double a_start,
                       double lambda0, double res0, double raw0,
                       const TraceConfig& cfg) {
  FamilyCurve c;
  c.angles = q;
  c.branch_index = branch;

  std::vector<RawPoint> bwd, fwd;
  fwd.push_back({a_start, lambda0, res0, raw0});

  // toward a -> 1 (the K -> 0 end, theta -> 0): anchors the branch's
  // rotation-number normalization. Steps keep |d raw| small enough for the
  // rotation chain to stay unambiguous.
  {
    double lam = lambda0, lam_prev = lambda0, raw = raw0;
    double am1 = a_start - 1.0;
    bool have_two = false;
    int budget = 6 * cfg.back_steps;
    while (budget-- > 0 && static_cast<int>(bwd.size()) < 3 * cfg.back_steps) {
      bool placed = false;
      double fac = 0.35;
      for (int attempt = 0; attempt < 5 && !placed; ++attempt) {
        double am1_try = am1 * fac;
        double a = 1.0 + am1_try;
        double seed = lam;  // lambda varies slowly in log(a-1)
        double window = have_two
                            ? std::max(4.0 * std::abs(lam - lam_prev),
                                       0.02 * (1.0 + std::abs(seed)))
                            : 0.12 * (1.0 + std::abs(seed));
        LocalRoot r = local_solve(q, a, seed, window, cfg);
        if (r.found) {
          double chained = chain_raw(r.raw_rotation, raw);
          if (std::abs(chained - raw) <= 0.22) {
            raw = chained;
            bwd.push_back({a, r.lambda, r.residual, raw});
            lam_prev = lam;
            lam = r.lambda;
            have_two = true;
            am1 = am1_try;
            placed = true;
            break;
          }
        }
        fac = 0.5 * (1.0 + fac);  // gentler shrink toward a = 1
      }
      if (!placed) break;
      if (std::abs(raw - std::round(raw)) < 0.03) break;  // theta ~ 0 reached
    }
  }

  // branch orientation: theta = s*(raw - m) with theta -> 0 at the a -> 1
  // end and theta increasing toward the interior endpoint
  double raw_low = bwd.empty() ? raw0 : bwd.back().raw;
  double m = std::round(raw_low);
  double s = (raw0 - raw_low) >= 0 ? 1.0 : -1.0;
  if (std::abs(raw0 - raw_low) < 1e-9) s = 1.0;

  // toward theta -> 1
  {
    double a_cur = a_start, lam_cur = lambda0, lam_prev = lambda0, raw = raw0;
    double step = cfg.step0 * a_start, step_prev = step;
    while (static_cast<int>(fwd.size()) < cfg.max_points) {
      double theta_cur = s * (raw - m);
      if (theta_cur >= cfg.theta_stop) {
        c.end_note = "theta target reached";
        break;
      }
      if (step < cfg.step_min_rel * a_cur) {
        c.end_note = "continuation step exhausted (branch end)";
        break;
      }
      double a_try = a_cur + step;
      double pred = lam_cur + (lam_cur - lam_prev) * (step / step_prev);
      double window = std::max(3.0 * std::abs(pred - lam_cur),
                               5e-3 * (1.0 + std::abs(lam_cur)));
      LocalRoot r = local_solve(q, a_try, pred, window, cfg);
      if (!r.found) {
        step *= 0.5;
        continue;
      }
      double chained = chain_raw(r.raw_rotation, raw);
      if (std::abs(chained - raw) > 0.22) {  // theta outran the chain
        step *= 0.5;
        continue;
      }
      raw = chained;
      fwd.push_back({a_try, r.lambda, r.residual, raw});
      lam_prev = lam_cur;
      lam_cur = r.lambda;
      step_prev = step;
      a_cur = a_try;
      step = std::min(step * cfg.step_grow, 0.3 * (a_cur - 1.0) + 0.02 * a_cur);
    }
    if (c.end_note.empty()) c.end_note = "max points reached";
    double th_last = s * (fwd.back().raw - m);
    c.lost = th_last < 0.9 && c.end_note != "theta target reached";
  }

  std::reverse(bwd.begin(), bwd.end());
  std::vector<RawPoint> all = std::move(bwd);
  all.insert(all.end(), fwd.begin(), fwd.end());
  for (const auto& rp : all) {
    FamilyPoint p;
    p.a = rp.a;
    p.lambda = rp.lambda;
    p.K = modulus(rp.a);
    p.residual = rp.residual;
    double th = s * (rp.raw - m);
    if (th > -0.02 && th < 1.02)
      p.theta = std::clamp(th, 1e-12, 1.0 - 1e-12);
    c.points.push_back(p);
  }
  c.small_a_end = EndBehavior::ModulusToZero;
  c.K_crit_est = c.points.back().K;
  c.monotone_intervals = count_monotone_intervals(c.points);
  return c;
}

}  // namespace

FamilyCurve trace_branch(const AngleQuadruple& q, int branch,
                         const TraceConfig& cfg) {
  if (q.two_delta() < 2)
    throw std::invalid_argument(
        "trace_branch: requires delta >= 1 (relabel_marking first)");
  ScanConfig sc;
  sc.grid = 1600;
  sc.period_opts = cfg.po;
  sc.mode = cfg.mode;
  std::vector<UnitaryRoot> roots = solve_lambda(q, cfg.a_start, sc);
  if (branch < 0 || branch >= static_cast<int>(roots.size()))
    throw std::invalid_argument(
        "trace_branch: branch index " + std::to_string(branch) +
        " out of range; " + std::to_string(roots.size()) +
        " branches found at a=" + std::to_string(cfg.a_start));
  const auto& r = roots[static_cast<std::size_t>(branch)];
  return trace_from(q, branch, cfg.a_start, r.lambda, r.residual,
                    r.p1a.imag() / kPi, cfg);
}

namespace {

// scan window used during branch discovery (tighter than the documented
// default so the grid actually resolves root brackets)
std::pair<double, double> discovery_window(const AngleQuadruple& q, double a) {
  HeunParams par{q, a, 0.0};
  double c = par.alpha_prime() * par.alpha_dprime();
  double s = 1.0 + q.sum();
  double w = (1.5 + 1.3 * a) * s;
  return {c - w, c + w};
}

bool curve_covers(const FamilyCurve& c, double a, double lambda) {
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    const auto& p = c.points[i];
    const auto& r = c.points[i + 1];
    if (a < p.a || a > r.a) continue;
    double t = (a - p.a) / (r.a - p.a);
    double lhat = p.lambda + t * (r.lambda - p.lambda);
    return std::abs(lambda - lhat) < 0.08 * (1.0 + std::abs(lhat));
  }
  if (!c.points.empty()) {
    for (const auto* e : {&c.points.front(), &c.points.back()})
      if (std::abs(a - e->a) < 0.02 * e->a &&
          std::abs(lambda - e->lambda) < 0.08 * (1.0 + std::abs(e->lambda)))
        return true;
  }
  return false;
}

}  // namespace

std::vector<FamilyCurve> trace_all_branches(const AngleQuadruple& q,
                                            const TraceConfig& cfg) {
  if (q.two_delta() < 2)
    throw std::invalid_argument(
        "trace_all_branches: requires delta >= 1 (relabel_marking first)");
  long expected = count(q).first_type_count;
  std::vector<FamilyCurve> curves;
  const double ladder[] = {cfg.a_start, 1.02, 1.008, 1.003, 1.2,
                           1.45,        1.9,  2.8,   4.2,   6.5, 9.5};
  for (double a : ladder) {
    if (static_cast<long>(curves.size()) >= expected) break;
    ScanConfig sc;
    std::tie(sc.lo, sc.hi) = discovery_window(q, a);
    sc.grid = 2400;
    sc.period_opts = cfg.po;
    sc.mode = cfg.mode;
    std::vector<UnitaryRoot> roots;
    try {
      roots = solve_lambda(q, a, sc);
    } catch (const std::exception&) {
      continue;
    }
    for (const auto& r : roots) {
      bool seen = false;
      for (const auto& c : curves)
        if (curve_covers(c, a, r.lambda)) {
          seen = true;
          break;
        }
      if (seen) continue;
      curves.push_back(trace_from(q, static_cast<int>(curves.size()), a,
                                  r.lambda, r.residual, r.p1a.imag() / kPi,
                                  cfg));
    }
  }
  return curves;
}

LimitResult limit_modulus_extrapolate(const FamilyCurve& curve) {
  LimitResult res;
  res.angles = curve.angles;
  res.method = LimitMethod::Extrapolation;

  std::vector<std::pair<double, double>> tail;  // (s = 1-theta, K)
  for (const auto& p : curve.points)
    if (p.theta && *p.theta >= 0.90) tail.emplace_back(1.0 - *p.theta, p.K);
  std::sort(tail.begin(), tail.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  if (tail.size() > 8) tail.erase(tail.begin(), tail.end() - 8);

  if (tail.size() < 3) {
    if (curve.points.empty())
      throw std::invalid_argument("limit_modulus_extrapolate: empty curve");
    res.K_crit = curve.points.back().K;
    double prev = curve.points.size() > 1
                      ? curve.points[curve.points.size() - 2].K
                      : res.K_crit;
    res.err = std::max(0.05 * res.K_crit, 2.0 * std::abs(res.K_crit - prev));
    return res;
  }

  // Neville table evaluated at s = 0
  std::size_t n = tail.size();
  std::vector<std::vector<double>> t(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) t[i][0] = tail[i].second;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = j; i < n; ++i) {
      double si = tail[i].first, sij = tail[i - j].first;
      t[i][j] = (si * t[i - 1][j - 1] - sij * t[i][j - 1]) / (si - sij);
    }
  double best = t[n - 1][n - 1], best_err = std::abs(t[n - 1][n - 1] - t[n - 2][n - 2]);
  for (std::size_t j = 1; j < n; ++j) {
    double err = std::abs(t[j][j] - t[j - 1][j - 1]);
    if (err < best_err) {
      best_err = err;
      best = t[j][j];
    }
  }
  res.K_crit = best;
  res.err = std::max(best_err, 1e-7 * best);
  return res;
}

FamilyCurve mirror_family(const FamilyCurve& curve) {
  FamilyCurve m = curve;
  m.derived_mirror = !curve.derived_mirror;
  for (auto& p : m.points) {
    p.a = p.a / (p.a - 1.0);
    p.K = 1.0 / p.K;
    p.lambda = std::numeric_limits<double>::quiet_NaN();
  }
  std::sort(m.points.begin(), m.points.end(),
            [](const FamilyPoint& x, const FamilyPoint& y) { return x.a < y.a; });
  m.small_a_end = curve.small_a_end == EndBehavior::ModulusToZero
                      ? EndBehavior::ModulusToInfinity
                      : EndBehavior::ModulusToZero;
  m.K_crit_est = 1.0 / curve.K_crit_est;
  return m;
}

std::vector<LimitResult> limit_moduli_extrapolated(const AngleQuadruple& q,
                                                   const TraceConfig& cfg) {
  std::vector<FamilyCurve> curves = trace_all_branches(q, cfg);
  std::vector<LimitResult> out;
  for (const auto& c : curves) out.push_back(limit_modulus_extrapolate(c));
  std::sort(out.begin(), out.end(), [](const LimitResult& a, const LimitResult& b) {
    return a.K_crit < b.K_crit;
  });
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j].net_index = static_cast<int>(j);
  return out;
}

}  // namespace sphrect
