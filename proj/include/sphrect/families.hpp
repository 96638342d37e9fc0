#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphrect/periods.hpp"

namespace sphrect {

struct FamilyPoint {
  double a = 0.0;
  double lambda = 0.0;
  double K = 0.0;
  std::optional<double> theta;
  double residual = 0.0;
};

enum class EndBehavior { ModulusToZero, ModulusToInfinity };

struct FamilyCurve {
  AngleQuadruple angles;
  int branch_index = 0;
  bool derived_mirror = false;  // second-type partner, lambda not re-solved
  std::vector<FamilyPoint> points;        // ordered by a
  EndBehavior small_a_end = EndBehavior::ModulusToZero;
  double K_crit_est = 0.0;                // K at the theta->1 end
  int monotone_intervals = 0;             // of K along the traced points
  bool lost = false;                      // continuation stopped prematurely
  std::string end_note;
};

struct TraceConfig {
  double a_start = 1.05;
  int back_steps = 7;          // geometric steps of a-1 toward a=1
  double step0 = 0.03;
  double step_grow = 1.35;
  double step_min_rel = 5e-7;
  int local_grid = 33;
  double guard = 0.2;          // accept |lambda - seed| <= guard * window
  double theta_stop = 0.9985;
  int max_points = 260;
  PeriodOptions po{0.0, 1e-11, 10};
  ExecMode mode = ExecMode::Serial;
};

// Continuation of branch `branch` (index in the lambda-sorted root list at
// a_start) through the (a, lambda) half-plane, recording K and theta.
FamilyCurve trace_branch(const AngleQuadruple& q, int branch,
                         const TraceConfig& cfg = {});

// Angle theta in (0,1) between the circles carrying the images of sides L1
// and L3, at one solved point. prev disambiguates the supplementary pair by
// continuity; without it the smaller candidate is returned.
std::optional<double> theta_estimate(const DevelopingIntegral& di,
                                     std::optional<double> prev = {});

// diagnostic data behind theta_estimate (used by tests)
struct ThetaDiagnostics {
  double cosCCp = 0.0, cosCCpp = 0.0;  // inversive products vs circle C
  double line_residual_L1 = 0.0, line_residual_L3 = 0.0;
};
std::optional<double> theta_estimate_full(const DevelopingIntegral& di,
                                          std::optional<double> prev,
                                          ThetaDiagnostics* diag);

enum class LimitMethod { Extrapolation, DegenerateSC };

struct LimitResult {
  AngleQuadruple angles;
  int net_index = 0;  // by increasing K_crit
  double K_crit = 0.0;
  LimitMethod method = LimitMethod::Extrapolation;
  double err = 0.0;
};

// Richardson (Neville) extrapolation of K against 1-theta at the traced end.
LimitResult limit_modulus_extrapolate(const FamilyCurve& curve);

// Second-type partner: modulus 1/K pointwise, a -> a/(a-1); accessory
// parameters are not re-solved (data-level mirror of the region picture).
FamilyCurve mirror_family(const FamilyCurve& curve);

// Trace every first-type branch and extrapolate; results sorted by K_crit.
std::vector<FamilyCurve> trace_all_branches(const AngleQuadruple& q,
                                            const TraceConfig& cfg = {});
std::vector<LimitResult> limit_moduli_extrapolated(const AngleQuadruple& q,
                                                   const TraceConfig& cfg = {});

}  // namespace sphrect
