#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowda/model.hpp"
#include "shadowda/tangent.hpp"
#include "shadowda/types.hpp"

namespace shadowda {

/// Stacked one-step residuals r_n = u_{n+1} - F(u_n), n = 0..N-1, stored
/// as columns. Zero residual means the trajectory is an exact orbit.
struct ResidualVector {
  Mat columns;

  double l2_norm() const { return columns.norm(); }
  double sup_norm() const { return columns.size() == 0 ? 0.0 : columns.cwiseAbs().maxCoeff(); }
  bool is_orbit(double tol = 1e-13) const { return sup_norm() < tol; }
};

ResidualVector residual(const ModelSystem& model, const Trajectory& u);

enum class SyncMode { Interleaved, AfterConvergence };

struct NewtonSettings {
  double tolerance = 1e-15;        // target relative residual
  double accept_tolerance = 1e-12; // floor acceptance when progress stalls
  int max_iterations = 50;
  int p = 0;                       // projection dimension; 0 means full dimension
  SyncMode sync_mode = SyncMode::Interleaved;
  std::vector<int> fixed_coords;   // nonempty: project on these fixed coordinates
  bool restart_full_newton_on_failure = false;
};

/// Assimilation window layout in model time; all lengths must be integer
/// multiples of the model's map step.
struct WindowSchedule {
  double initial_length = 0.0;  // full-Newton initialization window
  double length = 0.0;          // subsequent windows
  double horizon = 0.0;

  /// Window boundaries as map-step indices for the given map step.
  std::vector<int> boundaries(double dt_map) const;
};

struct WindowDiag {
  int index = 0;
  int start_step = 0;
  int end_step = 0;
  int iterations = 0;
  bool converged = false;
  bool hit_floor = false;     // accepted at accept_tolerance rather than tolerance
  bool anchor_used = false;   // stable-direction continuity applied
  std::string method;         // "full" or "projected"
  double final_rel_residual = 0.0;
  std::vector<double> residual_history;  // relative residual per iteration
};

struct AssimilationReport {
  Trajectory estimate;
  std::vector<WindowDiag> windows;
  bool converged = false;  // every window converged

  double mean_iterations() const;
  int windows_converged() const;
};

/// Full Newton refinement of G(u) = 0: each step solves the
/// under-determined linearized system with the right pseudoinverse (block
/// tridiagonal Gram solve) and applies the minimum-norm update. Divergence
/// and solver failures yield a non-converged report, not an exception.
AssimilationReport full_newton(const ModelSystem& model, const Trajectory& u0,
                               const NewtonSettings& settings);

struct ProjectedStepResult {
  Trajectory intermediate;  // u + Q mu
  Mat mu;                   // p x (N+1) reduced update
  double b_norm = 0.0;      // l2 norm of the projected residual
};

/// One projected Newton step in the non-stable subspace spanned by the
/// frame: assembles b_n = Q_{n+1}^T r_n, solves the reduced system with the
/// right pseudoinverse and returns the intermediate update.
ProjectedStepResult projected_newton_step(const ModelSystem& model, const Trajectory& u,
                                          const TangentFrame& frame);

/// Synchronization pass in the stable complement: starting from
/// ubar_0 + (I-P_0) delta_perp0, iterates
///   u_{n+1} = P_{n+1} ubar_{n+1} + (I-P_{n+1}) F(u_n).
/// Throws DivergenceError when the pass blows up.
Trajectory synchronize_stable(const ModelSystem& model, const Trajectory& ubar,
                              const TangentFrame& frame, const Vec& delta_perp0);

/// One assimilation window: alternate projected Newton steps and
/// synchronization passes until the projected residual meets tolerance.
/// delta_perp0 seeds the stable-direction continuity offset at the window
/// start (re-projected against the current frame each iteration).
AssimilationReport assimilate_window(const ModelSystem& model, const Trajectory& u_init,
                                     const NewtonSettings& settings, const Vec& delta_perp0);

/// Multi-window driver: full Newton on the initialization window, then
/// projected windows with stable-direction continuity across boundaries.
/// The initial iterate of every window is the observation proxy.
AssimilationReport window_driver(const ModelSystem& model, const Trajectory& obs_proxy,
                                 const WindowSchedule& schedule, const NewtonSettings& settings);

}  // namespace shadowda
