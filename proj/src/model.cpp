#include "shadowda/model.hpp"

#include <algorithm>
#include <utility>

namespace shadowda {

ModelSystem::ModelSystem(std::string name, int dim, Field f, FieldJacobian dfdx,
                         FieldJacobian dfdalpha, Vec alpha, double dt, int substeps,
                         Integrator scheme)
    : name_(std::move(name)),
      dim_(dim),
      f_(std::move(f)),
      dfdx_(std::move(dfdx)),
      dfdalpha_(std::move(dfdalpha)),
      alpha_(std::move(alpha)),
      dt_(dt),
      substeps_(substeps),
      scheme_(scheme) {
  if (dim_ <= 0) throw InvalidModelError("model dimension must be positive");
  if (scheme_ != Integrator::CustomMap && !(dt_ > 0.0))
    throw InvalidModelError("time step must be positive");
  if (substeps_ < 1) throw InvalidModelError("substep count must be at least 1");
}

ModelSystem ModelSystem::from_map(std::string name, int dim, Field map, FieldJacobian dmap_dx,
                                  FieldJacobian dmap_dalpha, Vec alpha, double map_dt) {
  ModelSystem m(std::move(name), dim, std::move(map), std::move(dmap_dx), std::move(dmap_dalpha),
                std::move(alpha), map_dt, 1, Integrator::CustomMap);
  return m;
}

ModelSystem ModelSystem::with_params(const Vec& alpha) const {
  ModelSystem m = *this;
  m.alpha_ = alpha;
  return m;
}

Vec ModelSystem::substep_impl(const Vec& x) const {
  switch (scheme_) {
    case Integrator::CustomMap:
      return f_(x, alpha_);
    case Integrator::ForwardEuler:
      return x + dt_ * f_(x, alpha_);
    case Integrator::RK4: {
      const Vec k1 = f_(x, alpha_);
      const Vec k2 = f_(x + 0.5 * dt_ * k1, alpha_);
      const Vec k3 = f_(x + 0.5 * dt_ * k2, alpha_);
      const Vec k4 = f_(x + dt_ * k3, alpha_);
      return x + (dt_ / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  throw InvalidModelError("unknown integrator");
}

Mat ModelSystem::substep_jacobian(const Vec& x) const {
  const Mat I = Mat::Identity(dim_, dim_);
  switch (scheme_) {
    case Integrator::CustomMap:
      return dfdx_(x, alpha_);
    case Integrator::ForwardEuler:
      return I + dt_ * dfdx_(x, alpha_);
    case Integrator::RK4: {
      const Vec k1 = f_(x, alpha_);
      const Vec x2 = x + 0.5 * dt_ * k1;
      const Vec k2 = f_(x2, alpha_);
      const Vec x3 = x + 0.5 * dt_ * k2;
      const Vec k3 = f_(x3, alpha_);
      const Vec x4 = x + dt_ * k3;
      const Mat dk1 = dfdx_(x, alpha_);
      const Mat dk2 = dfdx_(x2, alpha_) * (I + 0.5 * dt_ * dk1);
      const Mat dk3 = dfdx_(x3, alpha_) * (I + 0.5 * dt_ * dk2);
      const Mat dk4 = dfdx_(x4, alpha_) * (I + dt_ * dk3);
      return I + (dt_ / 6.0) * (dk1 + 2.0 * dk2 + 2.0 * dk3 + dk4);
    }
  }
  throw InvalidModelError("unknown integrator");
}

Mat ModelSystem::substep_param_jacobian(const Vec& x) const {
  const int q = param_count();
  if (q == 0) return Mat(dim_, 0);
  switch (scheme_) {
    case Integrator::CustomMap:
      return dfdalpha_(x, alpha_);
    case Integrator::ForwardEuler:
      return dt_ * dfdalpha_(x, alpha_);
    case Integrator::RK4: {
      const Vec k1 = f_(x, alpha_);
      const Vec x2 = x + 0.5 * dt_ * k1;
      const Vec k2 = f_(x2, alpha_);
      const Vec x3 = x + 0.5 * dt_ * k2;
      const Vec k3 = f_(x3, alpha_);
      const Vec x4 = x + dt_ * k3;
      const Mat pk1 = dfdalpha_(x, alpha_);
      const Mat pk2 = dfdalpha_(x2, alpha_) + dfdx_(x2, alpha_) * (0.5 * dt_ * pk1);
      const Mat pk3 = dfdalpha_(x3, alpha_) + dfdx_(x3, alpha_) * (0.5 * dt_ * pk2);
      const Mat pk4 = dfdalpha_(x4, alpha_) + dfdx_(x4, alpha_) * (dt_ * pk3);
      return (dt_ / 6.0) * (pk1 + 2.0 * pk2 + 2.0 * pk3 + pk4);
    }
  }
  throw InvalidModelError("unknown integrator");
}

Vec ModelSystem::substep(const Vec& x) const { return substep_impl(x); }

Vec ModelSystem::step(const Vec& x) const {
  Vec y = x;
  for (int k = 0; k < substeps_; ++k) {
    y = substep_impl(y);
    if (!y.allFinite()) throw DivergenceError("model step diverged", k);
  }
  return y;
}

Mat ModelSystem::tangent(const Vec& x) const {
  Mat J = Mat::Identity(dim_, dim_);
  Vec y = x;
  for (int k = 0; k < substeps_; ++k) {
    J = substep_jacobian(y) * J;
    if (k + 1 < substeps_) y = substep_impl(y);
  }
  return J;
}

Mat ModelSystem::param_tangent(const Vec& x) const {
  const int q = param_count();
  Mat P = Mat::Zero(dim_, q);
  if (q == 0) return P;
  Vec y = x;
  for (int k = 0; k < substeps_; ++k) {
    P = substep_jacobian(y) * P + substep_param_jacobian(y);
    if (k + 1 < substeps_) y = substep_impl(y);
  }
  return P;
}

Trajectory ModelSystem::integrate(const Vec& x0, int n_steps, int start_index) const {
  Mat states(dim_, n_steps + 1);
  states.col(0) = x0;
  Vec y = x0;
  for (int n = 0; n < n_steps; ++n) {
    try {
      y = step(y);
    } catch (const DivergenceError&) {
      throw DivergenceError("trajectory diverged", start_index + n);
    }
    states.col(n + 1) = y;
  }
  return Trajectory(std::move(states), start_index);
}

Vec l63_vector_field(const Vec& x, double sigma, double rho, double beta) {
  Vec f(3);
  f(0) = sigma * (x(1) - x(0));
  f(1) = x(0) * (rho - x(2)) - x(1);
  f(2) = x(0) * x(1) - beta * x(2);
  return f;
}

Vec l96_vector_field(const Vec& x, double forcing) {
  const int d = static_cast<int>(x.size());
  if (d < 4) throw InvalidModelError("Lorenz 96 requires dimension >= 4");
  Vec f(d);
  for (int l = 0; l < d; ++l) {
    const int lm2 = (l - 2 + d) % d;
    const int lm1 = (l - 1 + d) % d;
    const int lp1 = (l + 1) % d;
    f(l) = -x(lm2) * x(lm1) + x(lm1) * x(lp1) - x(l) + forcing;
  }
  return f;
}

namespace {

// maps free-parameter names to slots in (sigma, rho, beta)
std::vector<int> l63_param_slots(const std::vector<std::string>& names) {
  std::vector<int> slots;
  for (const auto& n : names) {
    if (n == "sigma")
      slots.push_back(0);
    else if (n == "rho")
      slots.push_back(1);
    else if (n == "beta")
      slots.push_back(2);
    else
      throw InvalidModelError("unknown Lorenz 63 parameter: " + n);
  }
  return slots;
}

}  // namespace

ModelSystem make_lorenz63(double sigma, double rho, double beta, double dt, int substeps,
                          const std::vector<std::string>& free_params, Integrator scheme) {
  const auto slots = l63_param_slots(free_params);
  const Eigen::Vector3d base(sigma, rho, beta);

  auto resolve = [slots, base](const Vec& alpha) {
    Eigen::Vector3d srb = base;
    for (size_t j = 0; j < slots.size(); ++j) srb(slots[j]) = alpha(static_cast<int>(j));
    return srb;
  };

  ModelSystem::Field f = [resolve](const Vec& x, const Vec& alpha) {
    const Eigen::Vector3d srb = resolve(alpha);
    return l63_vector_field(x, srb(0), srb(1), srb(2));
  };
  ModelSystem::FieldJacobian dfdx = [resolve](const Vec& x, const Vec& alpha) {
    const Eigen::Vector3d srb = resolve(alpha);
    Mat J(3, 3);
    J << -srb(0), srb(0), 0.0,  //
        srb(1) - x(2), -1.0, -x(0),  //
        x(1), x(0), -srb(2);
    return J;
  };
  ModelSystem::FieldJacobian dfdalpha = [slots](const Vec& x, const Vec&) {
    Mat D = Mat::Zero(3, static_cast<int>(slots.size()));
    for (size_t j = 0; j < slots.size(); ++j) {
      switch (slots[j]) {
        case 0: D(0, static_cast<int>(j)) = x(1) - x(0); break;   // d f / d sigma
        case 1: D(1, static_cast<int>(j)) = x(0); break;          // d f / d rho
        case 2: D(2, static_cast<int>(j)) = -x(2); break;         // d f / d beta
      }
    }
    return D;
  };

  Vec alpha(static_cast<int>(slots.size()));
  for (size_t j = 0; j < slots.size(); ++j) alpha(static_cast<int>(j)) = base(slots[j]);
  return ModelSystem("lorenz63", 3, std::move(f), std::move(dfdx), std::move(dfdalpha),
                     std::move(alpha), dt, substeps, scheme);
}

ModelSystem make_lorenz96(int dim, double forcing, double dt, int substeps, bool free_forcing,
                          Integrator scheme) {
  if (dim < 4) throw InvalidModelError("Lorenz 96 requires dimension >= 4");

  auto resolve = [forcing, free_forcing](const Vec& alpha) {
    return free_forcing ? alpha(0) : forcing;
  };
  ModelSystem::Field f = [resolve](const Vec& x, const Vec& alpha) {
    return l96_vector_field(x, resolve(alpha));
  };
  ModelSystem::FieldJacobian dfdx = [](const Vec& x, const Vec&) {
    const int d = static_cast<int>(x.size());
    Mat J = Mat::Zero(d, d);
    for (int l = 0; l < d; ++l) {
      const int lm2 = (l - 2 + d) % d;
      const int lm1 = (l - 1 + d) % d;
      const int lp1 = (l + 1) % d;
      J(l, lm2) += -x(lm1);
      J(l, lm1) += -x(lm2) + x(lp1);
      J(l, lp1) += x(lm1);
      J(l, l) += -1.0;
    }
    return J;
  };
  ModelSystem::FieldJacobian dfdalpha = [free_forcing](const Vec& x, const Vec&) {
    const int d = static_cast<int>(x.size());
    if (!free_forcing) return Mat(d, 0);
    return Mat(Mat::Ones(d, 1));
  };

  Vec alpha = free_forcing ? Vec::Constant(1, forcing) : Vec(0);
  return ModelSystem("lorenz96", dim, std::move(f), std::move(dfdx), std::move(dfdalpha),
                     std::move(alpha), dt, substeps, scheme);
}

ModelSystem augment_with_trivial_params(const ModelSystem& model) {
  const int d = model.dim();
  const int q = model.param_count();
  if (q == 0) throw InvalidModelError("trivial-parameter augmentation needs q >= 1");
  const int da = d + q;

  // Augmented map acts on (x, alpha): one composed application of the inner
  // model with the trailing components as parameters, parameters copied.
  ModelSystem::Field map = [model, d, q](const Vec& z, const Vec&) {
    const ModelSystem inner = model.with_params(z.tail(q));
    Vec out(d + q);
    out.head(d) = inner.step(z.head(d));
    out.tail(q) = z.tail(q);
    return out;
  };
  ModelSystem::FieldJacobian dmap = [model, d, q](const Vec& z, const Vec&) {
    const ModelSystem inner = model.with_params(z.tail(q));
    Mat J = Mat::Zero(d + q, d + q);
    J.topLeftCorner(d, d) = inner.tangent(z.head(d));
    J.topRightCorner(d, q) = inner.param_tangent(z.head(d));
    J.bottomRightCorner(q, q) = Mat::Identity(q, q);
    return J;
  };
  return ModelSystem::from_map(model.name() + "+params", da, std::move(map), std::move(dmap),
                               nullptr, Vec(0), model.map_dt());
}

}  // namespace shadowda
