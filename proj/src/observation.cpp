#include "shadowda/observation.hpp"

#include <cmath>

#include "shadowda/rng.hpp"

namespace shadowda {

bool ObservationSet::is_selector() const {
  for (int i = 0; i < H.rows(); ++i) {
    int units = 0;
    for (int j = 0; j < H.cols(); ++j) {
      if (H(i, j) == 1.0)
        ++units;
      else if (H(i, j) != 0.0)
        return false;
    }
    if (units != 1) return false;
  }
  return true;
}

std::vector<int> ObservationSet::selected_coordinates() const {
  std::vector<int> coords;
  for (int i = 0; i < H.rows(); ++i)
    for (int j = 0; j < H.cols(); ++j)
      if (H(i, j) == 1.0) coords.push_back(j);
  return coords;
}

Trajectory ObservationSet::as_trajectory() const {
  if (H.rows() != H.cols()) throw ShadowError("observations are not full-state");
  for (size_t i = 0; i < times.size(); ++i)
    if (times[i] != static_cast<int>(i)) throw ShadowError("observations are not at every map step");
  return Trajectory(values, times.empty() ? 0 : times.front());
}

Mat full_observation_operator(int d) { return Mat::Identity(d, d); }

Mat coordinate_selector(int d, const std::vector<int>& coords) {
  Mat H = Mat::Zero(static_cast<int>(coords.size()), d);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= d) throw ShadowError("selector coordinate out of range");
    H(static_cast<int>(i), coords[i]) = 1.0;
  }
  return H;
}

Trajectory generate_truth(const ModelSystem& model, double horizon, std::uint64_t seed,
                          double transient_time) {
  Rng rng(seed);
  Vec x = rng.normal_vector(model.dim());

  const int transient_steps = static_cast<int>(std::llround(transient_time / model.map_dt()));
  for (int n = 0; n < transient_steps; ++n) x = model.step(x);

  const double steps_exact = horizon / model.map_dt();
  const int n_steps = static_cast<int>(std::llround(steps_exact));
  if (std::abs(steps_exact - n_steps) > 1e-9)
    throw ShadowError("truth horizon is not a multiple of the map step");
  return model.integrate(x, n_steps);
}

ObservationSet observe(const Trajectory& truth, const Mat& H, double nu, int every_k,
                       std::uint64_t seed, NoiseKind kind) {
  if (every_k < 1 || truth.steps() % every_k != 0)
    throw ShadowError("observation stride must divide the trajectory step count");
  Rng rng(seed);
  ObservationSet obs;
  obs.H = H;
  obs.nu = nu;
  obs.kind = kind;
  obs.seed = seed;
  const int b = static_cast<int>(H.rows());
  const int count = truth.steps() / every_k + 1;
  obs.values.resize(b, count);
  obs.times.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = i * every_k;
    obs.times.push_back(truth.start_index + n);
    Vec noise = (kind == NoiseKind::Gaussian) ? Vec(nu * rng.normal_vector(b))
                                              : rng.uniform_vector(b, -nu, nu);
    obs.values.col(i) = H * truth.state(n) + noise;
  }
  return obs;
}

Trajectory direct_insertion_complete(const ModelSystem& model, const ObservationSet& obs,
                                     const Vec& z0) {
  if (!obs.is_selector()) throw ShadowError("direct insertion requires a coordinate selector");
  const int d = model.dim();
  const int n_obs = obs.count();
  if (n_obs < 2) throw ShadowError("direct insertion needs at least two observations");
  const int stride = obs.times[1] - obs.times[0];
  for (int i = 1; i < n_obs; ++i)
    if (obs.times[i] - obs.times[i - 1] != stride)
      throw ShadowError("direct insertion requires evenly spaced observations");
  if (stride != 1) throw ShadowError("direct insertion requires observations at every map step");

  Mat states(d, n_obs);
  Vec z = z0;
  // insert the observed coordinates of the initial state as well
  z = z - obs.H.transpose() * (obs.H * z) + obs.H.transpose() * obs.values.col(0);
  states.col(0) = z;
  for (int i = 1; i < n_obs; ++i) {
    Vec fz = model.step(z);
    z = fz - obs.H.transpose() * (obs.H * fz) + obs.H.transpose() * obs.values.col(i);
    if (!z.allFinite()) throw DivergenceError("direct insertion diverged", obs.times[i]);
    states.col(i) = z;
  }
  return Trajectory(std::move(states), obs.times.front());
}

Vec lift_first_observation(const ObservationSet& obs, int d) {
  Vec z = Vec::Zero(d);
  return z + obs.H.transpose() * obs.values.col(0);
}

}  // namespace shadowda
