#include "qck/vopt.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qck/density.hpp"
#include "qck/errors.hpp"

namespace qck::vopt {

namespace {

// Euclidean projection of v onto {x : x >= 0, sum x = 1}.
RealVector project_to_simplex(const RealVector& v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).max(0.0).matrix();
}

}  // namespace

Objective Objective::linear(ComplexMatrix observable, double tol) {
  if (observable.rows() != observable.cols()) throw DimensionError("Objective::linear: observable must be square");
  if (!is_hermitian(observable, tol)) throw PreconditionError("Objective::linear: observable is not Hermitian");
  const int d = static_cast<int>(observable.rows());
  Function fn = [h = observable](const ComplexMatrix& rho) { return trace_product(rho, h).real(); };
  return Objective(d, std::move(fn), std::move(observable));
}

Objective Objective::custom(int d, Function fn) {
  if (d < 2) throw DomainError("Objective::custom: d must be >= 2");
  return Objective(d, std::move(fn), std::nullopt);
}

double Objective::operator()(const ComplexMatrix& rho) const {
  if (rho.rows() != d_ || rho.cols() != d_) throw DimensionError("Objective: state dimension mismatch");
  return fn_(rho);
}

void OptConfig::check() const {
  if (!(step_size > 0.0)) throw DomainError("OptConfig: step_size must be positive");
  if (max_iters <= 0) throw DomainError("OptConfig: max_iters must be positive");
  if (!(grad_tol > 0.0)) throw DomainError("OptConfig: grad_tol must be positive");
  if (!(fd_step > 0.0)) throw DomainError("OptConfig: fd_step must be positive");
}

BlochVector project_physical(const BlochVector& tau, const GgmBasis& basis, double tol) {
  const ComplexMatrix rho = from_bloch(tau, basis);
  const auto eig = hermitian_eigensystem(rho);
  if (eig.values(0) >= -tol) return tau;
  const RealVector p = project_to_simplex(eig.values);
  const ComplexMatrix projected = eig.vectors * p.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return to_bloch(projected, basis);
}

RealVector finite_difference_gradient(const Objective& obj, const BlochVector& tau, const GgmBasis& basis,
                                      double fd_step) {
  if (!(fd_step > 0.0)) throw DomainError("finite_difference_gradient: fd_step must be positive");
  RealVector g(tau.tau.size());
  BlochVector probe = tau;
  for (Eigen::Index i = 0; i < tau.tau.size(); ++i) {
    probe.tau(i) = tau.tau(i) + fd_step;
    const double up = obj(from_bloch(probe, basis));
    probe.tau(i) = tau.tau(i) - fd_step;
    const double down = obj(from_bloch(probe, basis));
    probe.tau(i) = tau.tau(i);
    g(i) = (up - down) / (2.0 * fd_step);
  }
  return g;
}

RealVector gradient(const Objective& obj, const BlochVector& tau, const GgmBasis& basis, double fd_step) {
  if (obj.dim() != basis.d() || tau.d != basis.d()) throw DimensionError("gradient: dimension mismatch");
  if (!obj.is_linear()) return finite_difference_gradient(obj, tau, basis, fd_step);
  RealVector g(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    g(static_cast<Eigen::Index>(i)) = trace_product(basis[i], obj.observable()).real();
  }
  return g;
}

Trajectory optimize(const Objective& obj, const BlochVector& tau0, const OptConfig& cfg, const GgmBasis& basis) {
  cfg.check();
  if (obj.dim() != basis.d()) throw DimensionError("optimize: objective and basis dimensions differ");
  const ComplexMatrix rho0 = from_bloch(tau0, basis);
  if (!validate(rho0).is_density_matrix()) throw PreconditionError("optimize: starting point is not a physical state");

  Trajectory t;
  t.iterates.push_back({tau0, obj(rho0), false});
  for (int k = 0; k < cfg.max_iters; ++k) {
    const BlochVector& current = t.iterates.back().tau;
    const RealVector g = gradient(obj, current, basis, cfg.fd_step);
    if (g.norm() <= cfg.grad_tol) {
      t.converged = true;
      break;
    }
    BlochVector stepped{current.d, current.tau - cfg.step_size * g};
    BlochVector next = project_physical(stepped, basis);
    const bool projected = next.tau != stepped.tau;
    const double displacement = (next.tau - current.tau).norm();
    const double value = obj(from_bloch(next, basis));
    t.iterates.push_back({std::move(next), value, projected});
    if (displacement <= cfg.grad_tol * cfg.step_size) {
      t.converged = true;
      break;
    }
  }
  return t;
}

BlochVector random_interior_point(int d, std::uint64_t seed) {
  BlochVector out = bloch_origin(d);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Eigen::Index i = 0; i < out.tau.size(); ++i) out.tau(i) = normal(rng);
  const double n = static_cast<double>(out.tau.size());
  const double radius = insphere_radius(d) * std::pow(unit(rng), 1.0 / n);
  const double norm = out.tau.norm();
  if (norm > 0.0) out.tau *= radius / norm;
  return out;
}

}  // namespace qck::vopt
