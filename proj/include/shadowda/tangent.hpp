#pragma once

#include <vector>

#include "shadowda/linalg.hpp"
#include "shadowda/model.hpp"
#include "shadowda/types.hpp"

namespace shadowda {

/// Orthonormal tangent bases Q[0..N] (d x p) along a trajectory together
/// with the step factors R[0..N-1] (p x p) satisfying
///   Q[n+1] R[n] = DF(u_n) Q[n].
/// In Lyapunov mode R[n] is the QR triangular factor (positive diagonal);
/// for fixed-coordinate frames it is the general reduced block Q^T DF Q.
struct TangentFrame {
  std::vector<Mat> Q;
  std::vector<Mat> R;

  int p() const { return Q.empty() ? 0 : static_cast<int>(Q.front().cols()); }
  int steps() const { return static_cast<int>(R.size()); }

  /// P_n v = Q_n Q_n^T v without materializing P_n.
  Vec project(int n, const Vec& v) const { return Q[n] * (Q[n].transpose() * v); }
  Vec project_complement(int n, const Vec& v) const { return v - project(n, v); }
  /// Materialized projector, d x d; for tests and small-scale checks.
  Mat projector(int n) const { return Q[n] * Q[n].transpose(); }
};

/// Propagates a thin QR tangent frame along a trajectory from the seed
/// basis Q0. Throws a rank error (as frame-rank failure with the step
/// index) if the propagated basis loses rank.
TangentFrame propagate_frames(const ModelSystem& model, const Trajectory& traj, const Mat& Q0);

/// Frames pinned to fixed coordinate directions (columns of the identity);
/// R[n] holds the reduced map block Q^T DF(u_n) Q, not a QR factor.
TangentFrame fixed_coordinate_frames(const ModelSystem& model, const Trajectory& traj,
                                     const std::vector<int>& coords);

/// Lyapunov exponents per unit model time from the frame's triangular
/// factors: lambda_i = (1 / (N dt_map)) sum_n ln R[n](i,i).
Vec lyapunov_exponents(const TangentFrame& frame, double dt_map);

/// Runs the QR recursion n_spin steps along the leading part of `traj`
/// starting from the first p identity columns, returning the spun-up basis.
/// traj must contain at least n_spin steps.
Mat spin_up_frame(const ModelSystem& model, const Trajectory& traj, int p, int n_spin);

}  // namespace shadowda
