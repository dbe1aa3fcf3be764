#include "shadowda/metrics.hpp"

namespace shadowda {

double mse(const Trajectory& u, const Trajectory& truth) {
  if (u.length() != truth.length()) throw ShadowError("mse: trajectory length mismatch");
  const int n_steps = u.steps();
  double total = 0.0;
  for (int n = 1; n <= n_steps; ++n) total += (u.state(n) - truth.state(n)).squaredNorm();
  return total / n_steps;
}

double mse_on_coordinates(const Trajectory& u, const Trajectory& truth,
                          const std::vector<int>& coords) {
  if (u.length() != truth.length()) throw ShadowError("mse: trajectory length mismatch");
  const int n_steps = u.steps();
  double total = 0.0;
  for (int n = 1; n <= n_steps; ++n)
    for (int c : coords) {
      const double e = u.state(n)(c) - truth.state(n)(c);
      total += e * e;
    }
  return total / n_steps;
}

double obs_discrepancy(const Trajectory& u, const ObservationSet& obs) {
  double total = 0.0;
  int counted = 0;
  for (int i = 0; i < obs.count(); ++i) {
    const int n = obs.times[i] - u.start_index;
    if (n < 0 || n > u.steps()) throw ShadowError("obs_discrepancy: observation outside trajectory");
    if (obs.times[i] == 0) continue;  // discrepancies are scored from index 1
    total += (obs.values.col(i) - obs.H * u.state(n)).squaredNorm();
    ++counted;
  }
  if (counted == 0) return 0.0;
  return total / counted;
}

double discontinuity(const Trajectory& u, const ModelSystem& model) {
  const int n_steps = u.steps();
  double total = 0.0;
  for (int n = 0; n < n_steps; ++n)
    total += (u.state(n + 1) - model.step(u.state(n))).cwiseAbs().maxCoeff();
  return total / n_steps;
}

}  // namespace shadowda
