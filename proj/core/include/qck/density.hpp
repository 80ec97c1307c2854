#pragma once

#include <string>
#include <vector>

#include "qck/matrix.hpp"

namespace qck {

// Outcome of checking a matrix against the defining constraints of a density
// matrix. Each constraint is reported independently.
struct ValidationReport {
  bool hermitian = false;
  bool psd = false;
  bool normalized = false;
  bool det_nonneg = false;
  // Smallest eigenvalue of the Hermitian part of the input.
  double min_eigenvalue = 0.0;
  Complex trace;
  Complex determinant;
  std::vector<std::string> violations;

  // Hermitian, positive semidefinite and unit trace. The determinant flag is
  // implied by the other three and is informational.
  bool is_density_matrix() const { return hermitian && psd && normalized; }
};

// Checks hermiticity, positivity, normalization and det >= 0, all at absolute
// tolerance `tol`. For a non-Hermitian input the eigenvalue test runs on the
// Hermitian part. Throws DimensionError for non-square input and DomainError
// for tol <= 0.
ValidationReport validate(const ComplexMatrix& m, double tol = kDefaultTolerance);

// min eigenvalue >= -tol. Throws PreconditionError if m is not Hermitian
// within tol.
bool is_positive_semidefinite(const ComplexMatrix& m, double tol = kDefaultTolerance);

// A matrix that passed validate() at the stored tolerance. Immutable.
class DensityMatrix {
 public:
  // Throws PreconditionError listing the violations if `m` is not a density
  // matrix at `tol`.
  static DensityMatrix from_matrix(ComplexMatrix m, double tol = kDefaultTolerance);

  static DensityMatrix maximally_mixed(int n);

  // |k><k| in dimension n (0-based k).
  static DensityMatrix basis_projector(int n, int k);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  double tolerance() const { return tolerance_; }

 private:
  DensityMatrix(ComplexMatrix m, double tol) : matrix_(std::move(m)), tolerance_(tol) {}

  ComplexMatrix matrix_;
  double tolerance_;
};

// Tr rho^2, in [1/N, 1].
double purity(const DensityMatrix& rho);

// Number of eigenvalues above tol; eigenvalues in [-tol, tol] count as zero.
int rank_stratum(const DensityMatrix& rho, double tol = kDefaultTolerance);

// Dimension of the stratum of rank-r states among n x n density matrices:
// r(2n - r) real parameters of a rank-r Hermitian matrix, minus one for the
// trace. Throws DomainError unless 1 <= r <= n.
int strata_dimension(int n, int r);

// Hilbert-Schmidt distance D with D^2 = 1/2 Tr[(a - b)^2].
double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Same metric on arbitrary Hermitian matrices (e.g. rho^2 against rho).
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// lambda * rho + (1 - lambda) * sigma. Throws DomainError for lambda outside
// [0, 1] and DimensionError on a dimension mismatch.
DensityMatrix mix(const DensityMatrix& rho, const DensityMatrix& sigma, double lambda);

}  // namespace qck
