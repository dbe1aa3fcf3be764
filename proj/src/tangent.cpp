#include "shadowda/tangent.hpp"

#include <cmath>

namespace shadowda {

TangentFrame propagate_frames(const ModelSystem& model, const Trajectory& traj, const Mat& Q0) {
  const int n_steps = traj.steps();
  TangentFrame frame;
  frame.Q.reserve(n_steps + 1);
  frame.R.reserve(n_steps);
  frame.Q.push_back(Q0);
  for (int n = 0; n < n_steps; ++n) {
    const Mat B = model.tangent(traj.state(n)) * frame.Q.back();
    try {
      ThinQR qr = mgs_qr(B);
      frame.Q.push_back(std::move(qr.Q));
      frame.R.push_back(std::move(qr.R));
    } catch (const RankDeficientError&) {
      throw RankDeficientError("tangent frame lost rank", n);
    }
  }
  return frame;
}

TangentFrame fixed_coordinate_frames(const ModelSystem& model, const Trajectory& traj,
                                     const std::vector<int>& coords) {
  const int d = model.dim();
  const int p = static_cast<int>(coords.size());
  Mat Q = Mat::Zero(d, p);
  for (int j = 0; j < p; ++j) {
    if (coords[j] < 0 || coords[j] >= d)
      throw InvalidModelError("fixed projector coordinate out of range");
    Q(coords[j], j) = 1.0;
  }
  const int n_steps = traj.steps();
  TangentFrame frame;
  frame.Q.assign(n_steps + 1, Q);
  frame.R.reserve(n_steps);
  for (int n = 0; n < n_steps; ++n)
    frame.R.push_back(Q.transpose() * model.tangent(traj.state(n)) * Q);
  return frame;
}

Vec lyapunov_exponents(const TangentFrame& frame, double dt_map) {
  const int p = frame.p();
  const int n_steps = frame.steps();
  Vec sums = Vec::Zero(p);
  for (const Mat& R : frame.R)
    for (int i = 0; i < p; ++i) sums(i) += std::log(R(i, i));
  return sums / (n_steps * dt_map);
}

Mat spin_up_frame(const ModelSystem& model, const Trajectory& traj, int p, int n_spin) {
  if (n_spin > traj.steps())
    throw InvalidModelError("spin_up_frame: trajectory shorter than spin-up");
  Mat Q = Mat::Identity(model.dim(), p);
  if (n_spin == 0) return Q;
  TangentFrame frame = propagate_frames(model, traj.segment(0, n_spin), Q);
  return frame.Q.back();
}

}  // namespace shadowda
