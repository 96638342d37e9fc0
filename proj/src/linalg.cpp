#include "sphrect/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sphrect {

Svd jacobi_svd(Mat m) {
  if (m.rows < m.cols) throw std::invalid_argument("jacobi_svd: rows < cols");
  int n = m.cols, rows = m.rows;
  Mat v(n, n);
  for (int j = 0; j < n; ++j) v(j, j) = 1.0;

  auto col_dot = [&](int p, int q) {
    double s = 0.0;
    for (int r = 0; r < rows; ++r) s += m(r, p) * m(r, q);
    return s;
  };

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = col_dot(p, p), aqq = col_dot(q, q), apq = col_dot(p, q);
        if (std::abs(apq) <= 1e-30) continue;
        off = std::max(off, std::abs(apq) / std::sqrt(app * aqq + 1e-300));
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double cs = 1.0 / std::sqrt(1.0 + t * t), sn = cs * t;
        for (int r = 0; r < rows; ++r) {
          double xp = m(r, p), xq = m(r, q);
          m(r, p) = cs * xp - sn * xq;
          m(r, q) = sn * xp + cs * xq;
        }
        for (int r = 0; r < n; ++r) {
          double xp = v(r, p), xq = v(r, q);
          v(r, p) = cs * xp - sn * xq;
          v(r, q) = sn * xp + cs * xq;
        }
      }
    }
    if (off < 1e-15) break;
  }

  Svd out;
  out.sigma.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    out.sigma[static_cast<std::size_t>(j)] = std::sqrt(col_dot(j, j));
  // sort descending, permute v accordingly
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return out.sigma[static_cast<std::size_t>(a)] >
           out.sigma[static_cast<std::size_t>(b)];
  });
  Svd sorted;
  sorted.sigma.resize(static_cast<std::size_t>(n));
  sorted.v = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    sorted.sigma[static_cast<std::size_t>(j)] =
        out.sigma[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    for (int r = 0; r < n; ++r)
      sorted.v(r, j) = v(r, idx[static_cast<std::size_t>(j)]);
  }
  return sorted;
}

bool solve_dense(Mat a, std::vector<double> b, std::vector<double>& x) {
  int n = a.rows;
  if (a.cols != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_dense: shape mismatch");
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (std::abs(a(piv, c)) < 1e-300) return false;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      std::swap(b[static_cast<std::size_t>(c)], b[static_cast<std::size_t>(piv)]);
    }
    for (int r = c + 1; r < n; ++r) {
      double f = a(r, c) / a(c, c);
      if (f == 0.0) continue;
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(c)];
    }
  }
  x.assign(static_cast<std::size_t>(n), 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[static_cast<std::size_t>(r)];
    for (int j = r + 1; j < n; ++j) s -= a(r, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(r)] = s / a(r, r);
  }
  return true;
}

}  // namespace sphrect
