#include "qck/bloch.hpp"

#include <cmath>
#include <string>

#include "qck/errors.hpp"

namespace qck {

BlochVector bloch_origin(int d) {
  if (d < 2) throw DomainError("bloch_origin: d must be >= 2");
  return {d, RealVector::Zero(static_cast<Eigen::Index>(d) * d - 1)};
}

BlochVector to_bloch(const ComplexMatrix& rho, const GgmBasis& basis) {
  if (rho.rows() != basis.d() || rho.cols() != basis.d()) {
    throw DimensionError("to_bloch: matrix is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                         ", basis has d=" + std::to_string(basis.d()));
  }
  BlochVector out{basis.d(), RealVector(static_cast<Eigen::Index>(basis.size()))};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.tau(static_cast<Eigen::Index>(i)) = 0.5 * trace_product(rho, basis[i]).real();
  }
  return out;
}

BlochVector to_bloch(const DensityMatrix& rho, const GgmBasis& basis) { return to_bloch(rho.matrix(), basis); }

ComplexMatrix from_bloch(const BlochVector& tau, const GgmBasis& basis) {
  if (tau.d != basis.d() || tau.tau.size() != static_cast<Eigen::Index>(basis.size())) {
    throw DimensionError("from_bloch: expected d=" + std::to_string(basis.d()) + " with " +
                         std::to_string(basis.size()) + " components, got d=" + std::to_string(tau.d) + " with " +
                         std::to_string(tau.tau.size()));
  }
  const int d = basis.d();
  ComplexMatrix rho = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  for (std::size_t i = 0; i < basis.size(); ++i) rho += tau.tau(static_cast<Eigen::Index>(i)) * basis[i];
  return rho;
}

double bloch_radius(const BlochVector& tau) { return tau.tau.norm(); }

double pure_state_radius(int d) { return std::sqrt((d - 1.0) / (2.0 * d)); }

double insphere_radius(int d) { return std::sqrt(1.0 / (2.0 * d * (d - 1.0))); }

bool pure_surface_check(const BlochVector& tau, const StructureConstants& sc, double tol) {
  const auto n = static_cast<std::size_t>(tau.tau.size());
  if (sc.size() != n) throw DimensionError("pure_surface_check: structure constants do not match tau");
  const double d = tau.d;
  if (std::abs(tau.tau.squaredNorm() - (d - 1.0) / (2.0 * d)) > tol) return false;
  const double ratio = (d - 2.0) / d;
  for (std::size_t i = 0; i < n; ++i) {
    double star = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) star += sc.d(i, j, k) * tau.tau(j) * tau.tau(k);
    }
    if (std::abs(star - ratio * tau.tau(i)) > tol) return false;
  }
  return true;
}

ComplexMatrix QubitBallPoint::matrix() const {
  ComplexMatrix m(2, 2);
  m << a, Complex(alpha, -beta), Complex(alpha, beta), 1.0 - a;
  return m;
}

bool qubit_ball_check(const QubitBallPoint& p, double tol) {
  const double z = p.a - 0.5;
  return z * z + p.alpha * p.alpha + p.beta * p.beta <= 0.25 + tol;
}

SpinExpectations spin_expectations(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("spin_expectations: requires a 2x2 state");
  // sigma_x, sigma_y, sigma_z traces written out: Tr(rho sigma_x) = rho01 + rho10, etc.
  SpinExpectations s;
  s.jx = 0.5 * (rho(0, 1) + rho(1, 0)).real();
  s.jy = 0.5 * (Complex(0.0, 1.0) * (rho(0, 1) - rho(1, 0))).real();
  s.jz = 0.5 * (rho(0, 0) - rho(1, 1)).real();
  return s;
}

SpinExpectations spin_expectations(const DensityMatrix& rho) { return spin_expectations(rho.matrix()); }

}  // namespace qck
