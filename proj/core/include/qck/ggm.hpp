#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qck/matrix.hpp"

namespace qck {

// Generalized Gell-Mann matrices. All (j, k, l) indices are 1-based.

// |j><k| + |k><j|, 1 <= j < k <= d.
ComplexMatrix symmetric_ggm(int d, int j, int k);

// -i|j><k| + i|k><j|, 1 <= j < k <= d.
ComplexMatrix antisymmetric_ggm(int d, int j, int k);

// sqrt(2 / (l(l+1))) (sum_{j<=l} |j><j| - l |l+1><l+1|), 1 <= l <= d-1.
ComplexMatrix diagonal_ggm(int d, int l);

enum class GgmKind { symmetric, antisymmetric, diagonal };

// Identifies one basis element. For the diagonal species `j` holds l and `k`
// is 0.
struct GgmLabel {
  GgmKind kind;
  int j;
  int k;

  // "s12", "a13", "d2"
  std::string name() const;
  bool operator==(const GgmLabel&) const = default;
};

// The d^2 - 1 generalized Gell-Mann matrices in a fixed order: all symmetric
// matrices with (j, k) lexicographic, then the antisymmetric ones in the same
// order, then the diagonal ones for l = 1..d-1. Every element is Hermitian,
// traceless and Tr(L_a L_b) = 2 delta_ab.
class GgmBasis {
 public:
  // Throws DomainError for d < 2.
  explicit GgmBasis(int d);

  int d() const { return d_; }
  std::size_t size() const { return matrices_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<ComplexMatrix>& matrices() const { return matrices_; }
  const std::vector<GgmLabel>& labels() const { return labels_; }

  // Position of a label in the ordering. Throws DomainError if absent.
  std::size_t index_of(const GgmLabel& label) const;

  auto begin() const { return matrices_.begin(); }
  auto end() const { return matrices_.end(); }

 private:
  int d_;
  std::vector<ComplexMatrix> matrices_;
  std::vector<GgmLabel> labels_;
};

GgmBasis ggm_basis(int d);

// Symmetric and antisymmetric structure constants of the product algebra
//   L_i L_j = (2/d) delta_ij I + sum_k (d_ijk + i f_ijk) L_k,
// stored as dense rank-3 arrays indexed by basis position (0-based).
class StructureConstants {
 public:
  StructureConstants(std::size_t n, std::vector<double> d_sym, std::vector<double> f_antisym);

  std::size_t size() const { return n_; }
  double d(std::size_t i, std::size_t j, std::size_t k) const { return d_[(i * n_ + j) * n_ + k]; }
  double f(std::size_t i, std::size_t j, std::size_t k) const { return f_[(i * n_ + j) * n_ + k]; }

 private:
  std::size_t n_;
  std::vector<double> d_;
  std::vector<double> f_;
};

// f_ijk = Tr([L_i, L_j] L_k) / (4i), d_ijk = Tr({L_i, L_j} L_k) / 4.
StructureConstants structure_constants(const GgmBasis& basis);

}  // namespace qck
