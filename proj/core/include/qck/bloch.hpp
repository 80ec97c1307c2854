#pragma once

#include "qck/density.hpp"
#include "qck/ggm.hpp"
#include "qck/matrix.hpp"

namespace qck {

// Coordinates of rho = (1/d) I + sum_i tau_i L_i in the GgmBasis ordering.
struct BlochVector {
  int d = 0;
  RealVector tau;
};

// Zero vector (maximally mixed state) in dimension d.
BlochVector bloch_origin(int d);

// tau_i = 1/2 Tr(rho L_i). Throws DimensionError if rho does not match the
// basis dimension.
BlochVector to_bloch(const ComplexMatrix& rho, const GgmBasis& basis);
BlochVector to_bloch(const DensityMatrix& rho, const GgmBasis& basis);

// (1/d) I + sum_i tau_i L_i. The result is Hermitian with unit trace but is
// positive only inside the physical region; callers validate.
ComplexMatrix from_bloch(const BlochVector& tau, const GgmBasis& basis);

// Euclidean norm of tau.
double bloch_radius(const BlochVector& tau);

// sqrt((d-1) / (2d)): every pure state sits at this radius.
double pure_state_radius(int d);

// sqrt(1 / (2d(d-1))): every tau with norm at most this is a valid state.
double insphere_radius(int d);

// Pure-state conditions obtained from rho^2 = rho:
//   |tau|^2 = (d-1)/(2d)  and  sum_jk d_ijk tau_j tau_k = ((d-2)/d) tau_i.
// The second condition is vacuous at d = 2.
bool pure_surface_check(const BlochVector& tau, const StructureConstants& sc, double tol = kDefaultTolerance);

// Spin-1/2 parameters rho = [[a, alpha - i beta], [alpha + i beta, 1 - a]].
struct QubitBallPoint {
  double a = 0.5;
  double alpha = 0.0;
  double beta = 0.0;

  ComplexMatrix matrix() const;
};

// (a - 1/2)^2 + alpha^2 + beta^2 <= 1/4 (+ tol).
bool qubit_ball_check(const QubitBallPoint& p, double tol = 0.0);

struct SpinExpectations {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
};

// <J_i> = Tr(rho sigma_i / 2) for a qubit. Throws DimensionError unless d = 2.
SpinExpectations spin_expectations(const DensityMatrix& rho);
SpinExpectations spin_expectations(const ComplexMatrix& rho);

}  // namespace qck
