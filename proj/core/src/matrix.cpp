#include "qck/matrix.hpp"

#include <algorithm>
#include <string>

#include "qck/errors.hpp"

namespace qck {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

double hermiticity_error(const ComplexMatrix& m) {
  require_square(m, "hermiticity_error");
  double err = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      err = std::max(err, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return err;
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_error(m) <= tol; }

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  require_square(m, "hermitian_part");
  return (m + m.adjoint()) * 0.5;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigensystem");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_product: incompatible shapes");
  }
  // Tr(AB) = sum_ij A_ij B_ji
  return (a.array() * b.transpose().array()).sum();
}

}  // namespace qck
