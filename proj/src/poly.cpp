#include "sphrect/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphrect {

int degree(const Poly& p) {
  for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
    if (p[static_cast<std::size_t>(j)] != 0.0) return j;
  return -1;
}

Poly ptrim(Poly p) {
  while (!p.empty() && p.back() == 0.0) p.pop_back();
  return p;
}

Poly padd(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) r[j] += a[j];
  for (std::size_t j = 0; j < b.size(); ++j) r[j] += b[j];
  return ptrim(r);
}

Poly psub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) r[j] += a[j];
  for (std::size_t j = 0; j < b.size(); ++j) r[j] -= b[j];
  return ptrim(r);
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return ptrim(r);
}

Poly pscale(const Poly& a, double s) {
  Poly r = a;
  for (auto& c : r) c *= s;
  return ptrim(r);
}

Poly pderiv(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t j = 1; j < a.size(); ++j)
    r[j - 1] = static_cast<double>(j) * a[j];
  return ptrim(r);
}

double peval(const Poly& a, double x) {
  double v = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) v = v * x + a[j];
  return v;
}

cplx peval(const Poly& a, cplx z) {
  cplx v = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) v = v * z + a[j];
  return v;
}

std::vector<cplx> roots(const Poly& p_in) {
  Poly p = ptrim(p_in);
  int n = degree(p);
  if (n < 1) return {};
  std::vector<cplx> c(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    c[static_cast<std::size_t>(j)] =
        p[static_cast<std::size_t>(j)] / p[static_cast<std::size_t>(n)];

  double radius = 0.0;
  for (const auto& cj : c) radius = std::max(radius, std::abs(cj));
  radius = 1.0 + radius;

  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double phi = 2.0 * M_PI * j / n + 0.39;
    z[static_cast<std::size_t>(j)] =
        radius * cplx(std::cos(phi), std::sin(phi));
  }
  auto eval_monic = [&](cplx x) {
    cplx v = 1.0;
    for (int j = n - 1; j >= 0; --j) v = v * x + c[static_cast<std::size_t>(j)];
    return v;
  };
  for (int iter = 0; iter < 400; ++iter) {
    double move = 0.0;
    for (int j = 0; j < n; ++j) {
      cplx num = eval_monic(z[static_cast<std::size_t>(j)]);
      cplx den = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != j)
          den *= (z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)]);
      if (den == cplx(0.0)) den = 1e-300;
      cplx dz = num / den;
      z[static_cast<std::size_t>(j)] -= dz;
      move = std::max(move, std::abs(dz));
    }
    if (move < 1e-14 * radius) break;
  }

  // Newton polish against the original polynomial
  Poly dp = pderiv(p);
  for (auto& zj : z) {
    for (int it = 0; it < 4; ++it) {
      cplx f = peval(p, zj), df = peval(dp, zj);
      if (std::abs(df) == 0.0) break;
      cplx step = f / df;
      if (!(std::abs(step) < 1.0 + std::abs(zj))) break;
      zj -= step;
    }
  }

  // symmetrize conjugate pairs, snap near-real roots
  double scale = radius;
  for (auto& zj : z)
    if (std::abs(zj.imag()) < 1e-10 * (1.0 + std::abs(zj.real())))
      zj = cplx(zj.real(), 0.0);
  std::vector<bool> used(z.size(), false);
  for (std::size_t a = 0; a < z.size(); ++a) {
    if (used[a] || z[a].imag() == 0.0) continue;
    std::size_t best = a;
    double bd = 1e300;
    for (std::size_t b = 0; b < z.size(); ++b) {
      if (b == a || used[b] || z[b].imag() == 0.0) continue;
      double d = std::abs(z[b] - std::conj(z[a]));
      if (d < bd) {
        bd = d;
        best = b;
      }
    }
    if (best != a && bd < 1e-8 * scale) {
      cplx m = 0.5 * (z[a] + std::conj(z[best]));
      z[a] = m;
      z[best] = std::conj(m);
      used[a] = used[best] = true;
    }
  }
  std::sort(z.begin(), z.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return z;
}

}  // namespace sphrect
