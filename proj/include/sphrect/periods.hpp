#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphrect/darboux.hpp"
#include "sphrect/parallel.hpp"

namespace sphrect {

// The developing integrand R(z) = prod_j (z-a_j)^(A_j-1/2) / P(z) with the
// fixed upper-half-plane branch, P normalized to residues +-1.
struct DevelopingIntegral {
  HeunParams par;
  DarbouxPolynomial dp;
  double z0 = 0.0;  // base point: midpoint of (1,a)
};

// Builds Heun coefficients, the Darboux polynomial and its normalization.
// Throws std::runtime_error carrying the DarbouxStatus on failure.
DevelopingIntegral make_integral(const AngleQuadruple& A, double a,
                                 double lambda);

cplx integrand(const DevelopingIntegral& di, cplx zeta);

struct PeriodOptions {
  double detour_radius = 0.0;  // 0 = automatic
  double rel_tol = 1e-12;
  int max_level = 11;
};

struct PeriodValue {
  cplx value{0.0, 0.0};
  double err = 0.0;
  std::vector<std::pair<double, cplx>> pole_detours;  // root, -i*pi*residue
  bool ok = false;
  std::string error;
};

// Contour integral of R along the real axis from x_from to x_to (x_from <
// x_to), displaced into the upper half-plane by semicircular detours around
// real roots of P. Branch-point endpoints get singularity-aware quadrature.
PeriodValue integrate_real(const DevelopingIntegral& di, double x_from,
                           double x_to, const PeriodOptions& opt = {});

enum class Segment { Seg01, Seg1a };

// Canonical periods: Seg01 = (0,1) (real up to detour terms),
// Seg1a = (1,a) (imaginary).
PeriodValue period(const DevelopingIntegral& di, Segment seg,
                   const PeriodOptions& opt = {});

struct PeriodPair {
  PeriodValue p01, p1a;
};

struct UnitaryRoot {
  double a = 0.0;
  double lambda = 0.0;
  double residual = 0.0;  // |Re p01| / scale at the root
  double bracket_lo = 0.0, bracket_hi = 0.0;
  cplx p01{0.0, 0.0}, p1a{0.0, 0.0};
};

struct ScanConfig {
  double lo = 0.0, hi = 0.0;  // lo == hi: default range
  int grid = 2000;
  double root_tol = 1e-11;
  PeriodOptions period_opts;
  ExecMode mode = ExecMode::Serial;
};

struct ScanLog {
  std::vector<double> skipped;  // lambdas where Darboux failed
  std::vector<std::string> messages;
};

double default_scan_halfwidth(const AngleQuadruple& A, double a);

// g(lambda) = Re period(Seg01) on an explicit grid; NaN where the Darboux
// step degenerates. Serial and parallel modes give identical results.
std::vector<double> scan_values(const AngleQuadruple& A, double a,
                                const std::vector<double>& lambdas,
                                const PeriodOptions& opt, ExecMode mode,
                                ScanLog* log = nullptr);

// default lambda window: symmetric for moderate a, concentrated around
// alpha'alpha'' with spread O(a-1) near the confluent limit
std::pair<double, double> default_scan_range(const AngleQuadruple& A, double a);

// All roots of Re period(Seg01) = 0 in the scan range, deduplicated and
// sorted by lambda.
std::vector<UnitaryRoot> solve_lambda(const AngleQuadruple& A, double a,
                                      const ScanConfig& cfg = {},
                                      ScanLog* log = nullptr);

}  // namespace sphrect
