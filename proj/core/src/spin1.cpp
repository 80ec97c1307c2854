#include "qck/spin1.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qck/errors.hpp"

namespace qck::spin1 {

ComplexMatrix Params::matrix() const {
  ComplexMatrix m(3, 3);
  m << a, std::conj(h), g,
       h, b, std::conj(f),
       std::conj(g), f, c;
  return m;
}

Params Params::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DimensionError("spin1::Params::from_matrix: requires a 3x3 matrix");
  Params p;
  p.a = m(0, 0).real();
  p.b = m(1, 1).real();
  p.c = m(2, 2).real();
  p.h = m(1, 0);
  p.f = m(2, 1);
  p.g = m(0, 2);
  return p;
}

double determinant(const Params& p) {
  return p.a * p.b * p.c + 2.0 * (p.f * p.g * p.h).real() -
         (p.a * std::norm(p.f) + p.b * std::norm(p.g) + p.c * std::norm(p.h));
}

Case1Report case1_check(const Params& p, double tol) {
  const double trace = p.a + p.b + p.c;
  if (std::abs(trace - 1.0) > tol) {
    throw PreconditionError("case1_check: a + b + c = " + std::to_string(trace) + ", expected 1");
  }
  Case1Report r;
  r.a_nonneg = p.a >= -tol;
  r.b_nonneg = p.b >= -tol;
  r.c_nonneg = p.c >= -tol;
  r.f_bound = std::norm(p.f) <= p.b * p.c + tol;
  r.g_bound = std::norm(p.g) <= p.c * p.a + tol;
  r.h_bound = std::norm(p.h) <= p.a * p.b + tol;
  r.det = determinant(p);
  r.det_nonneg = r.det >= -tol;
  return r;
}

bool extremal_disc_check(const Params& p, Vertex vertex, double tol) {
  switch (vertex) {
    case Vertex::A:
      return std::norm(p.f) <= p.b * p.c + tol && std::abs(p.g) <= tol && std::abs(p.h) <= tol;
    case Vertex::B:
      return std::norm(p.g) <= p.c * p.a + tol && std::abs(p.f) <= tol && std::abs(p.h) <= tol;
    case Vertex::C:
      return std::norm(p.h) <= p.a * p.b + tol && std::abs(p.f) <= tol && std::abs(p.g) <= tol;
  }
  return false;
}

Rescaled rescale(const Params& p, double eps) {
  if (p.a < 0.0 || p.b < 0.0 || p.c < 0.0) throw DomainError("spin1::rescale: populations must be non-negative");
  const auto scaled = [eps](Complex z, double product) -> std::optional<Complex> {
    if (product <= eps * eps) return std::nullopt;
    return z / std::sqrt(product);
  };
  return {scaled(p.f, p.b * p.c), scaled(p.g, p.c * p.a), scaled(p.h, p.a * p.b)};
}

Params unrescale(const Rescaled& r, double a, double b, double c) {
  Params p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.f = r.F ? std::sqrt(b * c) * *r.F : Complex{};
  p.g = r.G ? std::sqrt(c * a) * *r.G : Complex{};
  p.h = r.H ? std::sqrt(a * b) * *r.H : Complex{};
  return p;
}

double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double y = std::fmod(x, two_pi);
  if (y <= -std::numbers::pi) y += two_pi;
  if (y > std::numbers::pi) y -= two_pi;
  return y;
}

BoundaryResiduals boundary_plane_check(const Rescaled& r, double tol) {
  if (!r.F) throw DomainError("boundary_plane_check: F is undefined at this vertex");
  if (std::abs(std::abs(*r.F) - 1.0) > tol) {
    throw DomainError("boundary_plane_check: requires |F| = 1, got |F| = " + std::to_string(std::abs(*r.F)));
  }
  if (!r.G || !r.H) throw DomainError("boundary_plane_check: G and H must be defined");
  const Complex F = *r.F;
  const Complex G = *r.G;
  const Complex H = *r.H;
  const double chi_f = std::arg(F);

  BoundaryResiduals out;
  out.plane = std::abs(G * std::polar(1.0, chi_f) - std::conj(H));
  if (std::abs(G) > tol && std::abs(H) > tol) {
    out.phase = std::abs(wrap_angle(chi_f + std::arg(G) + std::arg(H)));
  }
  return out;
}

SampleResult sample_physical(std::size_t count, std::uint64_t seed) {
  if (count == 0) throw DomainError("spin1::sample_physical: count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto exponential = [&] { return -std::log1p(-unit(rng)); };
  const auto disc_point = [&](double radius_sq) {
    const double r = std::sqrt(unit(rng) * radius_sq);
    return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
  };

  SampleResult out;
  out.states.reserve(count);
  while (out.states.size() < count) {
    ++out.attempts;
    // Normalized exponential spacings are uniform on the simplex.
    const double e1 = exponential();
    const double e2 = exponential();
    const double e3 = exponential();
    const double total = e1 + e2 + e3;
    Params p;
    p.a = e1 / total;
    p.b = e2 / total;
    p.c = 1.0 - p.a - p.b;
    if (p.c < 0.0) p.c = 0.0;
    p.f = disc_point(p.b * p.c);
    p.g = disc_point(p.c * p.a);
    p.h = disc_point(p.a * p.b);
    if (determinant(p) >= 0.0) out.states.push_back(p);
  }
  out.acceptance_rate = static_cast<double>(out.states.size()) / static_cast<double>(out.attempts);
  return out;
}

}  // namespace qck::spin1
