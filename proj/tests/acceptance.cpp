// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Tolerances are pinned in code next to each check.
#include <chrono>
#include <cmath>
#include <utility>
#include <cstdio>
#include <set>
#include <vector>

#include "sphrect/families.hpp"
#include "sphrect/modulus.hpp"
#include "sphrect/netgraph.hpp"
#include "sphrect/sc_limit.hpp"

using namespace sphrect;

namespace {

int failures = 0;

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(const char* name, bool ok, const std::string& detail, double dt) {
  std::printf("%s — %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name, dt,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++failures;
}

// One sweep over all parameter tuples, bucketing net counts per induced
// quadruple: independent of both the closed-form counts and the library's
// enumeration (no angle equations are solved here).
std::vector<long> sweep_counts_up_to_8() {
  std::vector<long> bucket(9 * 9 * 9 * 9, 0);
  for (int i = 0; i <= 8; ++i)
    for (int m = 0; m + i <= 8; ++m)
      for (int k = 0; k <= 8; ++k)
        for (int l = 0; l + k <= 8; ++l)
          for (int kap = 0; kap <= 3; ++kap)
            for (int mu = 0; mu <= 7; ++mu) {
              if (i > 0 && mu > 0) continue;
              for (int nu = 0; nu <= 7; ++nu) {
                if (l > 0 && nu > 0) continue;
                int a0 = i + m, a1 = i + k + nu + 1 + 2 * kap;
                int a2 = k + l, a3 = l + m + mu + 1 + 2 * kap;
                if (a1 > 8 || a3 > 8) continue;
                ++bucket[static_cast<std::size_t>(((a0 * 9 + a1) * 9 + a2) * 9 +
                                                  a3)];
              }
            }
  return bucket;
}

struct KTarget {
  AngleQuadruple q;
  std::vector<double> K;
  double rel;
};

}  // namespace

int main() {
  std::printf("sphrect acceptance suite\n");

  {  // 1. counting golden tests
    double t0 = now_s();
    bool ok = count(AngleQuadruple(0, 1, 0, 1)).first_type_count == 1 &&
              count(AngleQuadruple(1, 2, 1, 2)).first_type_count == 2 &&
              count(AngleQuadruple(2, 3, 2, 3)).first_type_count == 3 &&
              count(AngleQuadruple(1, 3, 1, 3)).first_type_count == 1;
    report("counting golden tests (1,2,3,1)", ok, "", now_s() - t0);
  }

  {  // 2. exhaustive oracle equivalence, A_j <= 8
    double t0 = now_s();
    long bad = 0;
    std::vector<long> bucket = sweep_counts_up_to_8();
    for (int a0 = 0; a0 <= 8; ++a0)
      for (int a1 = 0; a1 <= 8; ++a1)
        for (int a2 = 0; a2 <= 8; ++a2)
          for (int a3 = 0; a3 <= 8; ++a3) {
            AngleQuadruple q(a0, a1, a2, a3);
            // brute count of first-type nets: the sweep bucket of q itself
            // when delta >= 1, of the relabeled quadruple otherwise
            AngleQuadruple qe = q.two_delta() <= -2 ? relabel_marking(q) : q;
            long brute = bucket[static_cast<std::size_t>(
                ((qe[0] * 9 + qe[1]) * 9 + qe[2]) * 9 + qe[3])];
            if (brute != count(q).first_type_count) ++bad;
            if ((brute > 0) != exists(q)) ++bad;
          }
    report("exhaustive oracle equivalence (6561 quadruples)", bad == 0,
           bad ? std::to_string(bad) + " mismatches" : "", now_s() - t0);
  }

  {  // 3. symmetric-case law, A,B <= 10
    double t0 = now_s();
    long bad = 0;
    for (int A = 0; A <= 10; ++A)
      for (int B = 0; B <= 10; ++B) {
        int diff = std::abs(B - A);
        long want_total = diff < 1 ? 0 : (diff % 2 == 0 ? diff : A + B + 1);
        auto s = symmetric_count(A, B);
        if (s.total != want_total || s.first_type != want_total / 2) ++bad;
        if (s.first_type != count(AngleQuadruple(A, B, A, B)).first_type_count)
          ++bad;
      }
    report("symmetric-case law (alpha,beta with A,B <= 10)", bad == 0,
           bad ? std::to_string(bad) + " mismatches" : "", now_s() - t0);
  }

  {  // 4. net structural suite, sum A <= 12
    double t0 = now_s();
    long bad = 0, nets_checked = 0;
    std::string first_bad;
    for (int a0 = 0; a0 <= 12; ++a0)
      for (int a1 = 0; a1 <= 12 - a0; ++a1)
        for (int a2 = 0; a2 <= 12 - a0 - a1; ++a2)
          for (int a3 = 0; a3 <= 12 - a0 - a1 - a2; ++a3) {
            AngleQuadruple q(a0, a1, a2, a3);
            if (q.two_delta() < 2 || !exists(q)) continue;
            std::set<std::string> codes;
            auto nets = enumerate_nets(q);
            for (const auto& p : nets) {
              ++nets_checked;
              NetGraph g = realize(p);
              auto viol = validate(g);
              if (!viol.empty() ||
                  static_cast<int>(g.faces.size()) != 2 * q.sum()) {
                ++bad;
                if (first_bad.empty()) first_bad = p.str();
                continue;
              }
              DoubledTriangulation d = double_graph(g);
              if (d.v - d.e + d.f != 2 || !validate(d, q).empty()) {
                ++bad;
                if (first_bad.empty()) first_bad = p.str() + " (double)";
              }
              codes.insert(canonical_code(g));
            }
            if (codes.size() != nets.size()) {
              ++bad;
              if (first_bad.empty()) first_bad = q.str() + " equivalence";
            }
          }
    report("net structural suite (sum A <= 12)", bad == 0,
           bad ? std::to_string(bad) + " failures, first: " + first_bad
               : std::to_string(nets_checked) + " nets",
           now_s() - t0);
  }

  {  // 5. darboux suite
    double t0 = now_s();
    bool ok = true;
    std::string detail;
    for (auto q : {AngleQuadruple(0, 1, 0, 1), AngleQuadruple(1, 2, 1, 2)}) {
      for (int ia = 0; ia < 10 && ok; ++ia)
        for (int il = 0; il < 10 && ok; ++il) {
          double a = 1.15 + 0.35 * ia;
          double lam = -12.0 + 2.6 * il;
          HeunCoefficients h = build_heun(q, a, lam);
          DarbouxPolynomial dp = darboux_polynomial(h, q.sum());
          if (dp.status != DarbouxStatus::Ok || dp.deg != q.sum()) {
            ok = false;
            detail = "degree/status at " + q.str();
            break;
          }
          double res = hermite_residual(h, dp.P);
          if (res > 1e-10) {
            ok = false;
            detail = "residual " + std::to_string(res);
          }
        }
      if (!ok) break;
      // residue magnitudes on a unitary root
      auto roots = solve_lambda(q, 1.1, ScanConfig{});
      if (roots.empty()) {
        ok = false;
        detail = "no unitary root at a=1.1 for " + q.str();
        break;
      }
      DevelopingIntegral di = make_integral(q, 1.1, roots[0].lambda);
      double cmin = 1e300, cmax = 0.0;
      for (const auto& r : di.dp.residues) {
        cmin = std::min(cmin, std::abs(r));
        cmax = std::max(cmax, std::abs(r));
      }
      if (cmax - cmin > 1e-8 * cmax) {
        ok = false;
        detail = "residue magnitudes differ by " + std::to_string(cmax - cmin);
      }
    }
    report("darboux suite (deg, residual <= 1e-10, residues)", ok, detail,
           now_s() - t0);
  }

  {  // 6. period parity and detour invariance
    double t0 = now_s();
    bool ok = true;
    std::string detail;
    for (auto [q, a] : {std::pair{AngleQuadruple(0, 1, 0, 1), 1.12},
                        std::pair{AngleQuadruple(1, 2, 1, 2), 1.25}}) {
      auto roots = solve_lambda(q, a, ScanConfig{});
      if (roots.empty()) {
        ok = false;
        detail = "no root for " + q.str();
        break;
      }
      DevelopingIntegral di = make_integral(q, a, roots[0].lambda);
      PeriodValue p01 = period(di, Segment::Seg01);
      PeriodValue p1a = period(di, Segment::Seg1a);
      cplx detours = 0.0;
      for (const auto& [r, c] : p01.pole_detours) detours += c;
      double im01 = std::abs((p01.value - detours).imag());
      double re1a = std::abs(p1a.value.real());
      if (im01 > 1e-9 * std::max(1.0, std::abs(p01.value)) ||
          re1a > 1e-9 * std::max(1.0, std::abs(p1a.value))) {
        ok = false;
        detail = "parity violated: " + std::to_string(im01) + ", " +
                 std::to_string(re1a);
        break;
      }
      PeriodOptions r1, r2;
      r1.detour_radius = 2e-3;
      r2.detour_radius = 1e-3;
      double v1 = period(di, Segment::Seg01, r1).value.real();
      double v2 = period(di, Segment::Seg01, r2).value.real();
      if (std::abs(v1 - v2) > 1e-10 * std::max(1.0, std::abs(v1))) {
        ok = false;
        detail = "detour variance " + std::to_string(std::abs(v1 - v2));
        break;
      }
    }
    report("period parity and detour invariance", ok, detail, now_s() - t0);
  }

  std::vector<std::vector<LimitResult>> extrap_cache;
  {  // 7. limit moduli against the published values, both methods
    double t0 = now_s();
    const std::vector<KTarget> targets = {
        {AngleQuadruple(0, 1, 0, 1), {0.630963}, 1e-3},
        {AngleQuadruple(1, 2, 1, 2), {0.5433144, 1.193606}, 1e-3},
        {AngleQuadruple(2, 3, 2, 3), {0.476966, 0.887943, 1.458956}, 1e-3},
        {AngleQuadruple(1, 3, 1, 3), {0.4173}, 2e-3},
    };
    bool ok = true;
    std::string detail;
    for (const auto& t : targets) {
      auto lims = limit_moduli_extrapolated(t.q, TraceConfig{});
      extrap_cache.push_back(lims);
      std::vector<ScSolution> sols;
      try {
        sols = limit_modulus_sc_solutions(t.q);
      } catch (const std::exception& e) {
        ok = false;
        detail += t.q.str() + " sc: " + e.what() + "; ";
        continue;
      }
      if (lims.size() != t.K.size() || sols.size() != t.K.size()) {
        ok = false;
        detail += t.q.str() + " count mismatch; ";
        continue;
      }
      for (std::size_t j = 0; j < t.K.size(); ++j) {
        double want = t.K[j];
        double got_x = lims[j].K_crit, got_s = sols[j].K;
        if (std::abs(got_x - want) > t.rel * want) {
          ok = false;
          char buf[160];
          std::snprintf(buf, sizeof buf, "%s extrapolation %.7f != %.7f; ",
                        t.q.str().c_str(), got_x, want);
          detail += buf;
        }
        if (std::abs(got_s - want) > t.rel * want) {
          ok = false;
          char buf[160];
          std::snprintf(buf, sizeof buf, "%s degenerate-SC %.7f != %.7f; ",
                        t.q.str().c_str(), got_s, want);
          detail += buf;
        }
        // the two methods must agree within combined error estimates
        double bar = lims[j].err + 1e-6 * got_s + 1e-12;
        if (std::abs(got_x - got_s) > bar) {
          ok = false;
          detail += t.q.str() + " methods disagree; ";
        }
      }
    }
    report("limit moduli reproduction (both methods)", ok, detail,
           now_s() - t0);
  }

  {  // 8. family structure for (0,1,0,1) and (1,2,1,2)
    double t0 = now_s();
    bool ok = true;
    std::string detail;
    for (auto q : {AngleQuadruple(0, 1, 0, 1), AngleQuadruple(1, 2, 1, 2)}) {
      auto curves = trace_all_branches(q, TraceConfig{});
      if (static_cast<long>(curves.size()) != count(q).first_type_count) {
        ok = false;
        detail += q.str() + " branch count; ";
        continue;
      }
      std::vector<double> kcrits;
      for (const auto& c : curves) {
        // K continuous along the branch: bounded jumps between neighbors
        for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
          double jump = std::abs(c.points[i + 1].K - c.points[i].K);
          if (jump > 0.35 * std::max(0.05, c.points[i].K)) {
            ok = false;
            detail += q.str() + " K jump; ";
            break;
          }
        }
        // approaches 0 at the small-a end: decreasing trend, small minimum
        if (!(c.points.front().K < 0.5 &&
              c.points.front().K < c.points.back().K &&
              c.small_a_end == EndBehavior::ModulusToZero)) {
          ok = false;
          detail += q.str() + " K->0 end; ";
        }
        // theta increasing toward 1 at the K_crit end
        const auto& pts = c.points;
        if (!(pts.back().theta && *pts.back().theta > 0.99)) {
          ok = false;
          detail += q.str() + " theta end; ";
        } else {
          for (std::size_t i = pts.size() - 3; i + 1 < pts.size(); ++i)
            if (pts[i].theta && pts[i + 1].theta &&
                !(*pts[i].theta < *pts[i + 1].theta)) {
              ok = false;
              detail += q.str() + " theta not increasing; ";
            }
        }
        kcrits.push_back(limit_modulus_extrapolate(c).K_crit);
      }
      // branch reaches the matching K_crit at the far end
      std::sort(kcrits.begin(), kcrits.end());
      auto lims = limit_moduli_extrapolated(q, TraceConfig{});
      for (std::size_t j = 0; j < lims.size(); ++j)
        if (std::abs(kcrits[j] - lims[j].K_crit) > 1e-6) {
          ok = false;
          detail += q.str() + " K_crit end mismatch; ";
        }
      // diagnostic (warn, not fail): single monotone interval on (0,1,0,1)
      if (q == AngleQuadruple(0, 1, 0, 1) &&
          curves[0].monotone_intervals != 1)
        std::printf("WARN — monotone interval count %d != 1 on (0,1,0,1)\n",
                    curves[0].monotone_intervals);
    }
    report("family structure", ok, detail, now_s() - t0);
  }

  {  // region-diagram data for (1,2,1,2): nets and mirrors (derived check)
    double t0 = now_s();
    auto curves = trace_all_branches(AngleQuadruple(1, 2, 1, 2), TraceConfig{});
    bool ok = curves.size() == 2;
    std::string detail;
    if (ok) {
      std::vector<double> ks;
      for (const auto& c : curves) {
        ks.push_back(limit_modulus_extrapolate(c).K_crit);
        FamilyCurve m = mirror_family(c);
        if (!(m.K_crit_est > 0)) ok = false;
      }
      std::sort(ks.begin(), ks.end());
      // intervals (0, K_crit) and (1/K_crit, inf): reciprocal endpoints
      double r1 = 1.0 / ks[0], r2 = 1.0 / ks[1];
      if (std::abs(r1 - 1.840556) > 1e-3 * 1.840556) {
        ok = false;
        detail += "1/K_a = " + std::to_string(r1) + "; ";
      }
      if (std::abs(r2 - 0.837797) > 1e-3 * 0.837797) {
        ok = false;
        detail += "1/K_b = " + std::to_string(r2) + "; ";
      }
    }
    report("region diagram reciprocals for (1,2,1,2)", ok, detail,
           now_s() - t0);
  }

  std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
