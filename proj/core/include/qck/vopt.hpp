#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qck/bloch.hpp"
#include "qck/ggm.hpp"
#include "qck/matrix.hpp"

namespace qck::vopt {

// A real-valued function of a d x d state. The linear kind is Tr(rho H) for a
// Hermitian observable H and has a closed-form gradient.
class Objective {
 public:
  using Function = std::function<double(const ComplexMatrix&)>;

  // Throws DimensionError for non-square H, PreconditionError if H is not
  // Hermitian within tol.
  static Objective linear(ComplexMatrix observable, double tol = kDefaultTolerance);
  static Objective custom(int d, Function fn);

  int dim() const { return d_; }
  bool is_linear() const { return observable_.has_value(); }
  // Only valid for the linear kind.
  const ComplexMatrix& observable() const { return *observable_; }

  double operator()(const ComplexMatrix& rho) const;

 private:
  Objective(int d, Function fn, std::optional<ComplexMatrix> observable)
      : d_(d), fn_(std::move(fn)), observable_(std::move(observable)) {}

  int d_;
  Function fn_;
  std::optional<ComplexMatrix> observable_;
};

struct OptConfig {
  double step_size = 0.1;
  int max_iters = 1000;
  double grad_tol = 1e-12;
  double fd_step = 1e-5;
  std::uint64_t seed = 0;

  // Throws DomainError unless every field is positive (seed excepted).
  void check() const;
};

struct Iterate {
  BlochVector tau;
  double objective = 0.0;
  // True when the gradient step left the physical region and was projected
  // back.
  bool projected = false;
};

struct Trajectory {
  std::vector<Iterate> iterates;
  bool converged = false;
};

// Nearest physical state in the Hilbert-Schmidt (equivalently Euclidean tau)
// metric: eigenvalues of from_bloch(tau) are projected onto the probability
// simplex. Physical input is returned unchanged.
BlochVector project_physical(const BlochVector& tau, const GgmBasis& basis, double tol = kDefaultTolerance);

// Gradient with respect to tau. Linear objectives use d/dtau_i Tr(rho H) =
// Tr(L_i H); custom ones use central differences with spacing fd_step.
RealVector gradient(const Objective& obj, const BlochVector& tau, const GgmBasis& basis, double fd_step);

// Central differences regardless of the objective kind.
RealVector finite_difference_gradient(const Objective& obj, const BlochVector& tau, const GgmBasis& basis,
                                      double fd_step);

// Projected gradient descent from tau0 with a fixed step:
//   tau_{k+1} = project_physical(tau_k - step * grad).
// Stops when the gradient norm or the projected displacement (scaled by
// 1/step) falls to grad_tol, or after max_iters steps. Throws
// PreconditionError if tau0 is not physical.
Trajectory optimize(const Objective& obj, const BlochVector& tau0, const OptConfig& cfg, const GgmBasis& basis);

// Uniform point in the insphere ball, which is always a valid state.
BlochVector random_interior_point(int d, std::uint64_t seed);

}  // namespace qck::vopt
