#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shadowda/types.hpp"

namespace shadowda {

enum class Integrator { ForwardEuler, RK4, CustomMap };

/// A discrete dynamical model: the step map F (one application = `substeps`
/// integrator steps of size dt, or a user-supplied map), its tangent and
/// adjoint linearizations, and the derivative with respect to the model
/// parameter vector alpha. Instances are immutable values; all evaluation
/// methods are const and safe to call concurrently.
class ModelSystem {
 public:
  using Field = std::function<Vec(const Vec& x, const Vec& alpha)>;
  using FieldJacobian = std::function<Mat(const Vec& x, const Vec& alpha)>;

  /// ODE-based model: f is the right-hand side, dfdx its state Jacobian and
  /// dfdalpha the d x q parameter Jacobian (pass nullptr when q = 0).
  ModelSystem(std::string name, int dim, Field f, FieldJacobian dfdx, FieldJacobian dfdalpha,
              Vec alpha, double dt, int substeps, Integrator scheme = Integrator::ForwardEuler);

  /// Model defined directly by a map and its derivatives; map_dt is the
  /// model time advanced by one application.
  static ModelSystem from_map(std::string name, int dim, Field map, FieldJacobian dmap_dx,
                              FieldJacobian dmap_dalpha, Vec alpha, double map_dt);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int param_count() const { return static_cast<int>(alpha_.size()); }
  const Vec& params() const { return alpha_; }
  double dt() const { return dt_; }
  int substeps() const { return substeps_; }
  Integrator scheme() const { return scheme_; }
  /// Model time advanced by one application of the composed map.
  double map_dt() const { return dt_ * substeps_; }

  /// Copy of this model with a different parameter vector.
  ModelSystem with_params(const Vec& alpha) const;

  /// One integrator substep (x + dt f(x) for forward Euler).
  Vec substep(const Vec& x) const;

  /// The composed map: `substeps` integrator steps. Throws DivergenceError
  /// (carrying the substep index) on a non-finite result.
  Vec step(const Vec& x) const;

  /// Jacobian of the composed map, d x d: the ordered product of substep
  /// Jacobians, last substep leftmost.
  Mat tangent(const Vec& x) const;

  /// Adjoint of the composed-map Jacobian.
  Mat adjoint(const Vec& x) const { return tangent(x).transpose(); }

  /// Derivative of the composed map with respect to alpha, d x q,
  /// accumulated through substeps by the chain rule. Empty when q = 0.
  Mat param_tangent(const Vec& x) const;

  /// Advances `n` composed map applications, recording every state;
  /// result has n+1 columns.
  Trajectory integrate(const Vec& x0, int n_steps, int start_index = 0) const;

  Vec rhs(const Vec& x) const { return f_(x, alpha_); }
  Mat rhs_jacobian(const Vec& x) const { return dfdx_(x, alpha_); }

 private:
  Vec substep_impl(const Vec& x) const;
  Mat substep_jacobian(const Vec& x) const;
  Mat substep_param_jacobian(const Vec& x) const;

  std::string name_;
  int dim_;
  Field f_;
  FieldJacobian dfdx_;
  FieldJacobian dfdalpha_;
  Vec alpha_;
  double dt_;
  int substeps_;
  Integrator scheme_;
};

Vec l63_vector_field(const Vec& x, double sigma, double rho, double beta);
Vec l96_vector_field(const Vec& x, double forcing);

/// Lorenz 63 with optional free parameters named from {"sigma","rho","beta"};
/// the free subset becomes the model's alpha vector, in the order given.
ModelSystem make_lorenz63(double sigma = 10.0, double rho = 28.0, double beta = 8.0 / 3.0,
                          double dt = 0.005, int substeps = 1,
                          const std::vector<std::string>& free_params = {},
                          Integrator scheme = Integrator::ForwardEuler);

/// Lorenz 96 with cyclic boundary; requires dim >= 4. When free_forcing is
/// set, alpha = (forcing).
ModelSystem make_lorenz96(int dim = 36, double forcing = 8.0, double dt = 0.005,
                          int substeps = 10, bool free_forcing = false,
                          Integrator scheme = Integrator::ForwardEuler);

/// State-augmented system (x, alpha) with trivial parameter dynamics
/// alpha' = alpha; dimension d + q, no remaining free parameters.
ModelSystem augment_with_trivial_params(const ModelSystem& model);

}  // namespace shadowda
