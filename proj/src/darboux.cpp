#include "sphrect/darboux.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sphrect {

const char* to_string(DarbouxStatus s) {
  switch (s) {
    case DarbouxStatus::Ok: return "ok";
    case DarbouxStatus::RankZero: return "rank-zero";
    case DarbouxStatus::Degenerate: return "degenerate-nullspace";
    case DarbouxStatus::NonSimpleRoots: return "non-simple-roots";
    case DarbouxStatus::ResidueMismatch: return "residue-mismatch";
  }
  return "?";
}

cplx DarbouxPolynomial::P_at_off1(cplx z_minus_1) const {
  if (!product_form) return peval(P, (z_minus_1 + (1.0 - center)) / scale);
  cplx v = lead;
  for (const auto& off : root_off) v *= (z_minus_1 - off);
  return v;
}

double DarbouxPolynomial::real_P_at_off1(double z_minus_1) const {
  if (!product_form) return peval(P, (z_minus_1 + (1.0 - center)) / scale);
  // conjugate pairs multiplied together keep the value exactly real
  double v = lead;
  std::size_t k = 0;
  while (k < root_off.size()) {
    const cplx& o = root_off[k];
    if (o.imag() != 0.0 && k + 1 < root_off.size() &&
        root_off[k + 1] == std::conj(o)) {
      double dr = z_minus_1 - o.real();
      v *= dr * dr + o.imag() * o.imag();
      k += 2;
    } else {
      v *= z_minus_1 - o.real();
      k += 1;
    }
  }
  return v;
}

DarbouxPolynomial darboux_polynomial(const HeunCoefficients& h, int d) {
  DarbouxPolynomial dp;
  Mat m = hermite_matrix(h, d);
  // column scaling keeps the Jacobi sweeps well conditioned
  std::vector<double> cs(static_cast<std::size_t>(d) + 1, 0.0);
  for (int c = 0; c <= d; ++c) {
    double mx = 0.0;
    for (int r = 0; r < m.rows; ++r) mx = std::max(mx, std::abs(m(r, c)));
    cs[static_cast<std::size_t>(c)] = mx > 0 ? mx : 1.0;
    for (int r = 0; r < m.rows; ++r) m(r, c) /= cs[static_cast<std::size_t>(c)];
  }
  Svd svd = jacobi_svd(m);
  double smax = svd.sigma.front();
  dp.sigma_ratio = smax > 0 ? svd.sigma.back() / smax : 0.0;
  dp.nullity = 0;
  for (double s : svd.sigma)
    if (s < 1e-9 * smax) ++dp.nullity;
  if (dp.nullity == 0) {
    dp.status = DarbouxStatus::RankZero;
    dp.note = "smallest singular ratio " + std::to_string(dp.sigma_ratio);
    return dp;
  }
  if (dp.nullity >= 2) {
    dp.status = DarbouxStatus::Degenerate;
    dp.note = "nullspace dimension " + std::to_string(dp.nullity);
    return dp;
  }
  dp.P.assign(static_cast<std::size_t>(d) + 1, 0.0);
  for (int r = 0; r <= d; ++r)
    dp.P[static_cast<std::size_t>(r)] =
        svd.v(r, d) / cs[static_cast<std::size_t>(r)];
  double mx = 0.0;
  for (double c : dp.P) mx = std::max(mx, std::abs(c));
  for (auto& c : dp.P) c /= mx;
  if (dp.P.back() < 0.0)
    for (auto& c : dp.P) c = -c;
  dp.deg = degree(dp.P);
  dp.center = h.center;
  dp.scale = h.scale;
  std::vector<cplx> wr = roots(dp.P);
  for (auto& w : wr) dp.roots.push_back(h.center + h.scale * w);
  return dp;
}

namespace {

void to_product_form(DarbouxPolynomial& dp, const std::vector<cplx>& offs,
                     double lead) {
  dp.root_off = offs;
  // canonical order and conjugate adjacency for the real-product evaluator
  std::sort(dp.root_off.begin(), dp.root_off.end(),
            [](const cplx& x, const cplx& y) {
              if (x.real() != y.real()) return x.real() < y.real();
              return std::abs(x.imag()) < std::abs(y.imag());
            });
  for (std::size_t k = 0; k + 1 < dp.root_off.size(); ++k)
    if (dp.root_off[k].imag() > 0.0 &&
        dp.root_off[k + 1] == std::conj(dp.root_off[k]))
      std::swap(dp.root_off[k], dp.root_off[k + 1]);
  dp.roots.clear();
  for (const auto& off : dp.root_off) dp.roots.push_back(1.0 + off);
  dp.lead = lead;
  dp.product_form = true;
  dp.deg = static_cast<int>(dp.root_off.size());
}

}  // namespace

DarbouxPolynomial darboux_product(const AngleQuadruple& A, double a,
                                  double lambda) {
  int d = A.sum();
  HeunCoefficients hz = build_heun(A, a, lambda);
  DarbouxPolynomial dz = darboux_polynomial(hz, d);

  // roots near the z = 1 singular point come from the rescaled chart, far
  // roots and the leading coefficient from the z-chart; this keeps both the
  // confluent limit a -> 1 and large-degree cases well conditioned
  HeunCoefficients hw = build_heun_auto(A, a, lambda);
  DarbouxPolynomial dw = darboux_polynomial(hw, d);
  if (dw.status != DarbouxStatus::Ok) return dw;
  if (dz.status != DarbouxStatus::Ok) {
    dz.note = "z-chart: " + dz.note;
    return dz;
  }

  // far roots (relative to the 1,a cluster) are trusted from the z-chart;
  // the remaining d - n_far come from the rescaled chart, nearest first
  // (its spurious large roots stem from underflowed top coefficients)
  for (double cut : {0.3, 0.45, 0.2}) {
    std::vector<cplx> offs;
    for (const auto& r : dz.roots)
      if (std::abs(r - cplx(1.0)) > cut) offs.push_back(r - 1.0);
    std::size_t n_far = offs.size();
    if (n_far > static_cast<std::size_t>(d)) continue;
    std::size_t n_near = static_cast<std::size_t>(d) - n_far;
    std::vector<cplx> wnear;
    for (const auto& r : dw.roots) wnear.push_back(r - 1.0);
    std::sort(wnear.begin(), wnear.end(), [](const cplx& x, const cplx& y) {
      return std::abs(x) < std::abs(y);
    });
    if (wnear.size() < n_near) continue;
    if (n_near > 0 && std::abs(wnear[n_near - 1]) > 1.5 * cut) continue;
    // do not split a conjugate pair at the selection boundary
    if (n_near > 0 && n_near < wnear.size() &&
        std::abs(std::abs(wnear[n_near - 1]) - std::abs(wnear[n_near])) <
            1e-12 * (1.0 + std::abs(wnear[n_near])))
      continue;
    offs.insert(offs.end(), wnear.begin(),
                wnear.begin() + static_cast<long>(n_near));
    double lead = dz.P.back();
    DarbouxPolynomial dp = dw;
    to_product_form(dp, offs, lead);
    return dp;
  }
  dw.status = DarbouxStatus::NonSimpleRoots;
  dw.note = "chart merge failed: root counts disagree near the cluster cut";
  return dw;
}

void residues_and_normalize(DarbouxPolynomial& dp, const HeunParams& par,
                            double mag_tol) {
  if (dp.status != DarbouxStatus::Ok) return;
  if (!dp.product_form) {
    std::vector<cplx> offs;
    for (const auto& r : dp.roots) offs.push_back(r - 1.0);
    double lead = dp.P.empty() ? 1.0 : dp.P.back();
    to_product_form(dp, offs, lead);
  }
  const std::size_t n = dp.root_off.size();
  // collision check in relative terms of each pair's own scale
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double sep = std::abs(dp.root_off[i] - dp.root_off[j]);
      double sc = std::max(
          {1e-12, std::abs(dp.root_off[i]), std::abs(dp.root_off[j])});
      if (sep < 1e-7 * sc) {
        dp.status = DarbouxStatus::NonSimpleRoots;
        dp.note = "roots collide near z=" + std::to_string(dp.roots[i].real());
        return;
      }
    }

  // branch-point offsets from 1: z=0 -> -1, z=1 -> 0, z=a -> a-1
  const double eps = par.a - 1.0;
  const std::array<cplx, 3> bp_off = {cplx(-1.0), cplx(0.0), cplx(eps)};
  dp.residues.clear();
  for (std::size_t k = 0; k < n; ++k) {
    cplx prod = 1.0;
    for (int j = 0; j < 3; ++j)
      prod *= upower(dp.root_off[k] - bp_off[static_cast<std::size_t>(j)],
                     par.alpha(j) - 1.0);
    cplx dP = dp.lead;
    for (std::size_t l = 0; l < n; ++l)
      if (l != k) dP *= (dp.root_off[k] - dp.root_off[l]);
    dp.residues.push_back(prod / dP);
  }
  if (dp.residues.empty()) {
    dp.scale_c = 1.0;
    return;
  }
  double cmin = 1e300, cmax = 0.0;
  for (const auto& rs : dp.residues) {
    cmin = std::min(cmin, std::abs(rs));
    cmax = std::max(cmax, std::abs(rs));
  }
  if (cmax - cmin > mag_tol * cmax) {
    dp.status = DarbouxStatus::ResidueMismatch;
    dp.note = "residue magnitudes in [" + std::to_string(cmin) + ", " +
              std::to_string(cmax) + "]";
    return;
  }
  double c = 0.5 * (cmin + cmax);
  dp.scale_c = c;
  dp.lead *= c;
  for (auto& co : dp.P) co *= c;
  for (auto& rs : dp.residues) rs /= c;
}

Poly monomial_coefficients(const DarbouxPolynomial& dp) {
  if (!dp.product_form) return dp.P;
  std::vector<cplx> c{cplx(dp.lead, 0.0)};
  for (const auto& r : dp.roots) {
    std::vector<cplx> next(c.size() + 1, cplx(0.0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= r * c[j];
    }
    c = std::move(next);
  }
  Poly out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out[j] = c[j].real();
  return out;
}

double hermite_residual(const HeunCoefficients& h, const Poly& P) {
  int d = degree(P);
  if (d < 0) return 0.0;
  Mat m = hermite_matrix(h, d);
  double scale = 0.0, worst = 0.0;
  for (int r = 0; r < m.rows; ++r) {
    double row = 0.0, rs = 0.0;
    for (int c = 0; c <= d; ++c) {
      row += m(r, c) * P[static_cast<std::size_t>(c)];
      rs = std::max(rs, std::abs(m(r, c) * P[static_cast<std::size_t>(c)]));
    }
    worst = std::max(worst, std::abs(row));
    scale = std::max(scale, rs);
  }
  return scale > 0 ? worst / scale : 0.0;
}

}  // namespace sphrect
