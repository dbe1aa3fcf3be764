#pragma once

#include <cstdint>
#include <vector>

#include "shadowda/model.hpp"
#include "shadowda/types.hpp"

namespace shadowda {

enum class NoiseKind { Gaussian, Uniform };

/// Noisy observations y_n = H x_n + xi_n on a subset of map-step indices.
/// H is a b x d linear operator (a coordinate selector in all experiments
/// here); the noise has covariance nu^2 I for Gaussian noise, or is
/// uniform on [-noise_half_width, noise_half_width] per component.
struct ObservationSet {
  std::vector<int> times;  // map-step indices, ascending
  Mat H;                   // b x d
  double nu = 0.0;         // per-component std (Gaussian) or half-width (uniform)
  NoiseKind kind = NoiseKind::Gaussian;
  Mat values;              // b x times.size()
  std::uint64_t seed = 0;

  int obs_dim() const { return static_cast<int>(H.rows()); }
  int count() const { return static_cast<int>(times.size()); }

  /// True when H selects coordinates (one unit entry per row).
  bool is_selector() const;
  /// Selected state indices; valid only for selector operators.
  std::vector<int> selected_coordinates() const;

  /// For full-state observations at every map step: the observed values as
  /// a trajectory (the standard first Newton iterate).
  Trajectory as_trajectory() const;
};

/// Identity observation operator on R^d.
Mat full_observation_operator(int d);
/// Selector of the given coordinates (b x d, one unit entry per row).
Mat coordinate_selector(int d, const std::vector<int>& coords);

/// Truth run: standard Gaussian initial state, a 10-time-unit discard
/// transient, then `horizon` time units recorded at map resolution.
Trajectory generate_truth(const ModelSystem& model, double horizon, std::uint64_t seed,
                          double transient_time = 10.0);

/// Observes every k-th map step of `truth` (k must divide the step count).
ObservationSet observe(const Trajectory& truth, const Mat& H, double nu, int every_k,
                       std::uint64_t seed, NoiseKind kind = NoiseKind::Gaussian);

/// Completes partial observations by direct insertion: observed coordinates
/// are overwritten from data, the rest integrated with the model. H must be
/// a coordinate selector and observations must cover every map step.
Trajectory direct_insertion_complete(const ModelSystem& model, const ObservationSet& obs,
                                     const Vec& z0);

/// Default receiver start for direct insertion: the first observation
/// lifted by zeros in unobserved components.
Vec lift_first_observation(const ObservationSet& obs, int d);

}  // namespace shadowda
