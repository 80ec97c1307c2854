#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qck/matrix.hpp"

namespace qck::spin1 {

// A 3-level state written as
//   [[a, conj(h), g], [h, b, conj(f)], [conj(g), f, c]],  a + b + c = 1.
struct Params {
  double a = 1.0 / 3.0;
  double b = 1.0 / 3.0;
  double c = 1.0 / 3.0;
  Complex f;
  Complex g;
  Complex h;

  ComplexMatrix matrix() const;

  // Reads the parameters off a 3x3 matrix (lower-triangle off-diagonals).
  // Throws DimensionError unless m is 3x3.
  static Params from_matrix(const ComplexMatrix& m);
};

// abc + 2 Re(fgh) - (a|f|^2 + b|g|^2 + c|h|^2)
double determinant(const Params& p);

// The seven principal-minor inequalities. All seven hold exactly when the
// matrix is positive semidefinite.
struct Case1Report {
  bool a_nonneg = false;
  bool b_nonneg = false;
  bool c_nonneg = false;
  bool f_bound = false;  // |f|^2 <= bc
  bool g_bound = false;  // |g|^2 <= ca
  bool h_bound = false;  // |h|^2 <= ab
  bool det_nonneg = false;
  double det = 0.0;

  bool all() const { return a_nonneg && b_nonneg && c_nonneg && f_bound && g_bound && h_bound && det_nonneg; }
};

// Throws PreconditionError if |a + b + c - 1| > tol.
Case1Report case1_check(const Params& p, double tol = kDefaultTolerance);

// Vertex A is the disc |f|^2 <= bc with g = h = 0; B is |g|^2 <= ca with
// f = h = 0; C is |h|^2 <= ab with f = g = 0.
enum class Vertex { A, B, C };

bool extremal_disc_check(const Params& p, Vertex vertex, double tol = kDefaultTolerance);

// f = sqrt(bc) F, g = sqrt(ca) G, h = sqrt(ab) H. A coordinate whose
// population product is <= eps^2 is undefined at that vertex (nullopt).
struct Rescaled {
  std::optional<Complex> F;
  std::optional<Complex> G;
  std::optional<Complex> H;
};

// Throws DomainError if a, b or c is negative.
Rescaled rescale(const Params& p, double eps = 1e-12);

// Inverse of rescale for the given populations. Undefined coordinates map to
// zero off-diagonals (the only value allowed on a collapsed disc).
Params unrescale(const Rescaled& r, double a, double b, double c);

struct BoundaryResiduals {
  double plane = 0.0;  // |G e^{i arg F} - conj(H)|
  double phase = 0.0;  // |wrap(arg F + arg G + arg H)|, 0 when |G| or |H| <= tol
};

// Residuals of the |F| = 1 boundary relations. Throws DomainError if F is
// undefined or ||F| - 1| > tol, or if G or H is undefined.
BoundaryResiduals boundary_plane_check(const Rescaled& r, double tol = kDefaultTolerance);

// Wraps an angle into (-pi, pi].
double wrap_angle(double x);

struct SampleResult {
  std::vector<Params> states;
  std::size_t attempts = 0;
  double acceptance_rate = 0.0;
};

// Rejection sampling of the physical region: populations uniform on the
// simplex, off-diagonals uniform in the polydisc |f|^2 <= bc, |g|^2 <= ca,
// |h|^2 <= ab, accepted iff det >= 0. Deterministic for a given seed.
// Throws DomainError for count == 0.
SampleResult sample_physical(std::size_t count, std::uint64_t seed);

}  // namespace qck::spin1
