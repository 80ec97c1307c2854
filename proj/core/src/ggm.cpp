#include "qck/ggm.hpp"

#include <cmath>
#include <string>

#include "qck/errors.hpp"

namespace qck {

namespace {

void check_pair(const char* what, int d, int j, int k) {
  if (!(1 <= j && j < k && k <= d)) {
    throw DomainError(std::string(what) + ": need 1 <= j < k <= d, got d=" + std::to_string(d) +
                      " j=" + std::to_string(j) + " k=" + std::to_string(k));
  }
}

}  // namespace

ComplexMatrix symmetric_ggm(int d, int j, int k) {
  check_pair("symmetric_ggm", d, j, k);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(j - 1, k - 1) = 1.0;
  m(k - 1, j - 1) = 1.0;
  return m;
}

ComplexMatrix antisymmetric_ggm(int d, int j, int k) {
  check_pair("antisymmetric_ggm", d, j, k);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(j - 1, k - 1) = Complex(0.0, -1.0);
  m(k - 1, j - 1) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix diagonal_ggm(int d, int l) {
  if (!(1 <= l && l <= d - 1)) {
    throw DomainError("diagonal_ggm: need 1 <= l <= d-1, got d=" + std::to_string(d) + " l=" + std::to_string(l));
  }
  const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < l; ++j) m(j, j) = scale;
  m(l, l) = -scale * l;
  return m;
}

std::string GgmLabel::name() const {
  switch (kind) {
    case GgmKind::symmetric:
      return "s" + std::to_string(j) + std::to_string(k);
    case GgmKind::antisymmetric:
      return "a" + std::to_string(j) + std::to_string(k);
    case GgmKind::diagonal:
      return "d" + std::to_string(j);
  }
  return {};
}

GgmBasis::GgmBasis(int d) : d_(d) {
  if (d < 2) throw DomainError("ggm_basis: d must be >= 2, got " + std::to_string(d));
  const std::size_t n = static_cast<std::size_t>(d) * d - 1;
  matrices_.reserve(n);
  labels_.reserve(n);
  for (int j = 1; j <= d; ++j) {
    for (int k = j + 1; k <= d; ++k) {
      matrices_.push_back(symmetric_ggm(d, j, k));
      labels_.push_back({GgmKind::symmetric, j, k});
    }
  }
  for (int j = 1; j <= d; ++j) {
    for (int k = j + 1; k <= d; ++k) {
      matrices_.push_back(antisymmetric_ggm(d, j, k));
      labels_.push_back({GgmKind::antisymmetric, j, k});
    }
  }
  for (int l = 1; l < d; ++l) {
    matrices_.push_back(diagonal_ggm(d, l));
    labels_.push_back({GgmKind::diagonal, l, 0});
  }
}

std::size_t GgmBasis::index_of(const GgmLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw DomainError("GgmBasis::index_of: no element " + label.name() + " at d=" + std::to_string(d_));
}

GgmBasis ggm_basis(int d) { return GgmBasis(d); }

StructureConstants::StructureConstants(std::size_t n, std::vector<double> d_sym, std::vector<double> f_antisym)
    : n_(n), d_(std::move(d_sym)), f_(std::move(f_antisym)) {
  if (d_.size() != n * n * n || f_.size() != n * n * n) {
    throw DimensionError("StructureConstants: arrays must hold n^3 entries");
  }
}

StructureConstants structure_constants(const GgmBasis& basis) {
  const std::size_t n = basis.size();
  std::vector<ComplexMatrix> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = basis[i] * basis[j];
  }

  std::vector<double> d_sym(n * n * n);
  std::vector<double> f_antisym(n * n * n);
  const Complex four_i(0.0, 4.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix commutator = products[i * n + j] - products[j * n + i];
      const ComplexMatrix anticommutator = products[i * n + j] + products[j * n + i];
      for (std::size_t k = 0; k < n; ++k) {
        // Both traces are real for Hermitian inputs; the imaginary parts are
        // rounding noise.
        f_antisym[(i * n + j) * n + k] = (trace_product(commutator, basis[k]) / four_i).real();
        d_sym[(i * n + j) * n + k] = (trace_product(anticommutator, basis[k]) / 4.0).real();
      }
    }
  }
  return StructureConstants(n, std::move(d_sym), std::move(f_antisym));
}

}  // namespace qck
