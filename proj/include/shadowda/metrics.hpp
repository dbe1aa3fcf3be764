#pragma once

#include "shadowda/model.hpp"
#include "shadowda/observation.hpp"
#include "shadowda/types.hpp"

namespace shadowda {

/// Run scores. MSE_observed is only meaningful for partial-observation runs
/// (negative when unset).
struct ScoreSet {
  double C_truth = 0.0;      // observation discrepancy of the truth
  double C_estimate = 0.0;   // observation discrepancy of the estimate
  double mse = 0.0;
  double mse_observed = -1.0;
  double discontinuity = 0.0;
  double mean_iterations = 0.0;
  int windows_total = 0;
  int windows_converged = 0;
};

/// Mean square error (1/N) sum_{n=1..N} |u_n - truth_n|^2; the sum starts
/// at n = 1.
double mse(const Trajectory& u, const Trajectory& truth);

/// As `mse` but restricted to the given coordinates.
double mse_on_coordinates(const Trajectory& u, const Trajectory& truth,
                          const std::vector<int>& coords);

/// Observation discrepancy (1/N) sum (y_n - H u_n)^T (y_n - H u_n) over
/// observation times with index >= 1.
double obs_discrepancy(const Trajectory& u, const ObservationSet& obs);

/// Mean over steps of the max-norm one-step residual |u_{n+1} - F(u_n)|_inf;
/// dominated by window-boundary jumps for windowed estimates.
double discontinuity(const Trajectory& u, const ModelSystem& model);

}  // namespace shadowda
