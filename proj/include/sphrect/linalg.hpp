#pragma once

#include <vector>

namespace sphrect {

// Row-major dense matrix, just large enough for the nullspace and fitting
// problems in this project (dimensions stay well under ~100).
struct Mat {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
  double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

struct Svd {
  std::vector<double> sigma;  // descending
  Mat v;                      // right singular vectors as columns
};

// One-sided Jacobi SVD (values and right vectors only); rows >= cols.
Svd jacobi_svd(Mat m);

// Gaussian elimination with partial pivoting; returns false if singular.
bool solve_dense(Mat a, std::vector<double> b, std::vector<double>& x);

}  // namespace sphrect
