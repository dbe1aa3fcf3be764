#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace shadowda {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class ShadowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModelError : public ShadowError {
 public:
  using ShadowError::ShadowError;
};

/// A model step or forward pass produced a non-finite state.
class DivergenceError : public ShadowError {
 public:
  DivergenceError(const std::string& what, int step)
      : ShadowError(what + " (step " + std::to_string(step) + ")"), step(step) {}
  int step;
};

class RankDeficientError : public ShadowError {
 public:
  RankDeficientError(const std::string& what, int column)
      : ShadowError(what + " (column " + std::to_string(column) + ")"), column(column) {}
  int column;
};

class FactorizationError : public ShadowError {
 public:
  FactorizationError(const std::string& what, int block)
      : ShadowError(what + " (block " + std::to_string(block) + ")"), block(block) {}
  int block;
};

class SingularUpdateError : public ShadowError {
 public:
  using ShadowError::ShadowError;
};

class ConfigError : public ShadowError {
 public:
  using ShadowError::ShadowError;
};

/// A discrete orbit or pseudo-orbit: states u_0..u_N stored as columns of a
/// d x (N+1) matrix. `start_index` is the absolute time index of column 0.
struct Trajectory {
  Mat states;
  int start_index = 0;

  Trajectory() = default;
  explicit Trajectory(Mat s, int start = 0) : states(std::move(s)), start_index(start) {}

  int dim() const { return static_cast<int>(states.rows()); }
  /// Number of map steps N (states.cols() - 1).
  int steps() const { return static_cast<int>(states.cols()) - 1; }
  int length() const { return static_cast<int>(states.cols()); }

  Eigen::Ref<const Vec> state(int n) const { return states.col(n); }
  Eigen::Ref<Vec> state(int n) { return states.col(n); }

  /// Sub-trajectory over columns [from, to] inclusive.
  Trajectory segment(int from, int to) const {
    Trajectory out;
    out.states = states.middleCols(from, to - from + 1);
    out.start_index = start_index + from;
    return out;
  }

  bool all_finite() const { return states.allFinite(); }
};

}  // namespace shadowda
