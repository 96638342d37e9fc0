#include "sphrect/quadrature.hpp"

#include <cmath>
#include <vector>

namespace sphrect {

namespace {

struct Node {
  double x, dlo, dhi, w;
  bool usable;
};

Node de_node(double t, double lo, double hi) {
  Node n;
  double hw = 0.5 * (hi - lo);
  double mid = 0.5 * (hi + lo);
  double u = 0.5 * M_PI * std::sinh(t);
  double ch = std::cosh(u);
  double th = std::tanh(u);
  n.x = mid + hw * th;
  // 1 +- tanh(u) without cancellation
  if (u >= 0) {
    double e = std::exp(-2.0 * u);
    n.dlo = hw * 2.0 / (1.0 + e);
    n.dhi = hw * 2.0 * e / (1.0 + e);
  } else {
    double e = std::exp(2.0 * u);
    n.dlo = hw * 2.0 * e / (1.0 + e);
    n.dhi = hw * 2.0 / (1.0 + e);
  }
  n.w = hw * 0.5 * M_PI * std::cosh(t) / (ch * ch);
  n.usable = n.dlo > 0.0 && n.dhi > 0.0 && n.w > 1e-300;
  return n;
}

}  // namespace

QuadResult tanh_sinh(const SegFn& f, double lo, double hi, double rel_tol,
                     int max_level) {
  QuadResult res;
  if (hi == lo) {
    res.converged = true;
    return res;
  }
  const double t_max = 6.6;  // dlo/dhi underflow well before this
  double h = 1.0;

  cplx sum = 0.0;
  {
    Node n0 = de_node(0.0, lo, hi);
    sum = n0.w * f(n0.x, n0.dlo, n0.dhi);
    ++res.evals;
    for (int s = -1; s <= 1; s += 2) {
      int tiny = 0;
      for (int j = 1;; ++j) {
        double t = s * j * h;
        if (std::abs(t) > t_max) break;
        Node n = de_node(t, lo, hi);
        if (!n.usable) break;
        cplx c = n.w * f(n.x, n.dlo, n.dhi);
        ++res.evals;
        sum += c;
        if (std::abs(c) < 1e-18 * std::abs(sum)) {
          if (++tiny >= 2) break;
        } else {
          tiny = 0;
        }
      }
    }
  }
  cplx prev = h * sum;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (int s = -1; s <= 1; s += 2) {
      int tiny = 0;
      for (int j = 1;; j += 2) {  // odd multiples only
        double t = s * j * h;
        if (std::abs(t) > t_max) break;
        Node n = de_node(t, lo, hi);
        if (!n.usable) break;
        cplx c = n.w * f(n.x, n.dlo, n.dhi);
        ++res.evals;
        sum += c;
        if (std::abs(c) < 1e-18 * std::abs(sum)) {
          if (++tiny >= 2) break;
        } else {
          tiny = 0;
        }
      }
    }
    cplx cur = h * sum;
    res.err = std::abs(cur - prev);
    res.value = cur;
    double scale = std::abs(cur);
    if (level >= 3 && res.err <= rel_tol * (scale > 0 ? scale : 1.0)) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  res.value = prev;
  return res;
}

double agm(double x, double y) {
  for (int it = 0; it < 80; ++it) {
    double a = 0.5 * (x + y);
    double g = std::sqrt(x * y);
    if (std::abs(x - y) <= 1e-16 * a) return a;
    x = a;
    y = g;
  }
  return 0.5 * (x + y);
}

}  // namespace sphrect
