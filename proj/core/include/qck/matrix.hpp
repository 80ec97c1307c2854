#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qck {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Absolute tolerance used by every constraint check unless the caller passes
// its own.
inline constexpr double kDefaultTolerance = 1e-10;

// max |m(i,j) - conj(m(j,i))|. Throws DimensionError for non-square input.
double hermiticity_error(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTolerance);

// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Eigenvalues of a Hermitian matrix in ascending order. Only the lower
// triangle is read.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

struct HermitianEigensystem {
  RealVector values;       // ascending
  ComplexMatrix vectors;   // columns are eigenvectors
};

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

// Tr(a * b) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qck
