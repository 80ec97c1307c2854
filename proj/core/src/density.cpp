#include "qck/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qck/errors.hpp"

namespace qck {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

ValidationReport validate(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("validate: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
  if (m.rows() == 0) throw DimensionError("validate: empty matrix");
  if (!(tol > 0.0)) throw DomainError("validate: tolerance must be positive");

  ValidationReport r;
  const double herm_err = hermiticity_error(m);
  r.hermitian = herm_err <= tol;
  if (!r.hermitian) r.violations.push_back("not Hermitian: max |m_ij - conj(m_ji)| = " + fmt(herm_err));

  const RealVector eig = hermitian_eigenvalues(hermitian_part(m));
  r.min_eigenvalue = eig(0);
  r.psd = r.min_eigenvalue >= -tol;
  if (!r.psd) r.violations.push_back("not positive semidefinite: min eigenvalue = " + fmt(r.min_eigenvalue));

  r.trace = m.trace();
  r.normalized = std::abs(r.trace - Complex(1.0, 0.0)) <= tol;
  if (!r.normalized) {
    r.violations.push_back("trace != 1: trace = " + fmt(r.trace.real()) + " + " + fmt(r.trace.imag()) + "i");
  }

  r.determinant = m.determinant();
  r.det_nonneg = r.determinant.real() >= -tol;
  if (!r.det_nonneg) r.violations.push_back("negative determinant: det = " + fmt(r.determinant.real()));
  return r;
}

bool is_positive_semidefinite(const ComplexMatrix& m, double tol) {
  const double herm_err = hermiticity_error(m);
  if (herm_err > tol) {
    throw PreconditionError("is_positive_semidefinite: matrix is not Hermitian (error " + fmt(herm_err) + ")");
  }
  if (m.rows() == 0) return true;
  return hermitian_eigenvalues(m)(0) >= -tol;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, double tol) {
  const ValidationReport r = validate(m, tol);
  if (!r.is_density_matrix()) {
    std::string msg = "not a density matrix:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw PreconditionError(msg);
  }
  return DensityMatrix(std::move(m), tol);
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  if (n < 1) throw DomainError("maximally_mixed: dimension must be >= 1");
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n), kDefaultTolerance);
}

DensityMatrix DensityMatrix::basis_projector(int n, int k) {
  if (n < 1 || k < 0 || k >= n) throw DomainError("basis_projector: index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(k, k) = 1.0;
  return DensityMatrix(std::move(m), kDefaultTolerance);
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

int rank_stratum(const DensityMatrix& rho, double tol) {
  const RealVector eig = hermitian_eigenvalues(rho.matrix());
  return static_cast<int>(std::count_if(eig.begin(), eig.end(), [tol](double x) { return x > tol; }));
}

int strata_dimension(int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw DomainError("strata_dimension: need 1 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  return r * (2 * n - r) - 1;
}

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("hs_distance: dimension mismatch");
  const ComplexMatrix diff = a - b;
  // Tr[(a-b)^2] = sum_ij diff_ij diff_ji; real for Hermitian diff.
  const double t = trace_product(diff, diff).real();
  return std::sqrt(std::max(0.0, 0.5 * t));
}

double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return hs_distance(rho.matrix(), sigma.matrix());
}

DensityMatrix mix(const DensityMatrix& rho, const DensityMatrix& sigma, double lambda) {
  if (rho.dim() != sigma.dim()) throw DimensionError("mix: dimension mismatch");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("mix: lambda must lie in [0, 1]");
  if (lambda == 0.0) return sigma;
  if (lambda == 1.0) return rho;
  const double tol = std::max(rho.tolerance(), sigma.tolerance());
  return DensityMatrix::from_matrix(lambda * rho.matrix() + (1.0 - lambda) * sigma.matrix(), tol);
}

}  // namespace qck
