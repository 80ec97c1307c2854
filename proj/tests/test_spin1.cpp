#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qck/density.hpp"
#include "qck/errors.hpp"
#include "qck/spin1.hpp"
#include "support/oracles.hpp"
#include "support/random_states.hpp"

using namespace qck;
using namespace qck::spin1;
using qck::testing::Rng;

namespace {

Params uniform(Complex off) {
  Params p;
  p.f = p.g = p.h = off;
  return p;
}

}  // namespace

TEST_SUITE("spin1") {
  TEST_CASE("matrix layout") {
    Params p;
    p.a = 0.5;
    p.b = 0.3;
    p.c = 0.2;
    p.f = {0.01, 0.02};
    p.g = {0.03, -0.04};
    p.h = {-0.05, 0.06};
    const ComplexMatrix m = p.matrix();
    CHECK(m(0, 1) == std::conj(p.h));
    CHECK(m(1, 0) == p.h);
    CHECK(m(0, 2) == p.g);
    CHECK(m(2, 0) == std::conj(p.g));
    CHECK(m(1, 2) == std::conj(p.f));
    CHECK(m(2, 1) == p.f);
    CHECK(is_hermitian(m, 0.0));
    const Params back = Params::from_matrix(m);
    CHECK(back.f == p.f);
    CHECK(back.g == p.g);
    CHECK(back.h == p.h);
  }

  TEST_CASE("case1_check examples") {
    const auto center = case1_check(uniform(0.0));
    CHECK(center.all());
    CHECK(center.det == doctest::Approx(1.0 / 27.0));

    const auto boundary = case1_check(uniform(1.0 / 3.0));
    CHECK(boundary.all());
    CHECK(std::abs(boundary.det) <= 1e-15);

    Params vertex;
    vertex.a = 1.0;
    vertex.b = vertex.c = 0.0;
    vertex.g = 0.1;
    const auto r = case1_check(vertex);
    CHECK_FALSE(r.g_bound);
    CHECK_FALSE(r.all());

    Params bad_trace = uniform(0.0);
    bad_trace.a = 0.5;
    CHECK_THROWS_AS(case1_check(bad_trace), PreconditionError);
  }

  TEST_CASE("closed-form determinant agrees with cofactor expansion") {
    Rng rng(50);
    for (int t = 0; t < 20000; ++t) {
      const ComplexMatrix m = qck::testing::random_unit_trace_hermitian(3, rng);
      const Complex oracle = qck::testing::oracle::determinant_3x3(m);
      REQUIRE(std::abs(determinant(Params::from_matrix(m)) - oracle.real()) <= 1e-12);
    }
  }

  TEST_CASE("seven inequalities agree with positivity") {
    Rng rng(51);
    int disagreements = 0;
    int psd_count = 0;
    for (int t = 0; t < 20000; ++t) {
      const ComplexMatrix m = qck::testing::random_unit_trace_hermitian(3, rng);
      const bool minors = case1_check(Params::from_matrix(m), 1e-10).all();
      const bool psd = is_positive_semidefinite(m, 1e-10);
      if (minors != psd) ++disagreements;
      psd_count += psd;
    }
    CHECK(disagreements == 0);
    // the generator must exercise both sides
    CHECK(psd_count > 2000);
    CHECK(psd_count < 18000);
  }

  TEST_CASE("extremal discs") {
    Params on_a;
    on_a.a = 0.0;
    on_a.b = on_a.c = 0.5;
    on_a.f = 0.5;
    CHECK(extremal_disc_check(on_a, Vertex::A));
    CHECK_FALSE(extremal_disc_check(on_a, Vertex::B));
    Params off_a = on_a;
    off_a.f = 0.8;
    CHECK_FALSE(extremal_disc_check(off_a, Vertex::A));
    const Params diagonal = uniform(0.0);
    CHECK(extremal_disc_check(diagonal, Vertex::A));
    CHECK(extremal_disc_check(diagonal, Vertex::B));
    CHECK(extremal_disc_check(diagonal, Vertex::C));
  }

  TEST_CASE("rescale") {
    const auto r = rescale(uniform(1.0 / 3.0));
    REQUIRE(r.F);
    REQUIRE(r.G);
    REQUIRE(r.H);
    CHECK(std::abs(*r.F - 1.0) <= 1e-15);
    CHECK(std::abs(*r.G - 1.0) <= 1e-15);
    CHECK(std::abs(*r.H - 1.0) <= 1e-15);

    const auto zero = rescale(uniform(0.0));
    CHECK(*zero.F == Complex{});
    CHECK(*zero.G == Complex{});
    CHECK(*zero.H == Complex{});

    Params edge;
    edge.a = 0.5;
    edge.b = 0.0;
    edge.c = 0.5;
    const auto e = rescale(edge);
    CHECK_FALSE(e.F.has_value());
    CHECK_FALSE(e.H.has_value());
    CHECK(e.G.has_value());

    Params negative = uniform(0.0);
    negative.a = -0.1;
    CHECK_THROWS_AS(rescale(negative), DomainError);
  }

  TEST_CASE("unrescale inverts rescale") {
    const auto samples = sample_physical(500, 3);
    for (const auto& p : samples.states) {
      const Params back = unrescale(rescale(p), p.a, p.b, p.c);
      REQUIRE(std::abs(back.f - p.f) <= 1e-12);
      REQUIRE(std::abs(back.g - p.g) <= 1e-12);
      REQUIRE(std::abs(back.h - p.h) <= 1e-12);
    }
  }

  TEST_CASE("boundary_plane_check examples") {
    Rescaled ones{Complex(1.0), Complex(1.0), Complex(1.0)};
    auto res = boundary_plane_check(ones);
    CHECK(res.plane == 0.0);
    CHECK(res.phase == 0.0);

    const double third = std::numbers::pi / 3.0;
    Rescaled twisted{Complex(1.0), std::polar(1.0, third), std::polar(1.0, -third)};
    res = boundary_plane_check(twisted);
    CHECK(res.plane <= 1e-15);
    CHECK(res.phase <= 1e-15);

    Rescaled bad{Complex(1.0), Complex(1.0), std::polar(1.0, std::numbers::pi / 2.0)};
    res = boundary_plane_check(bad);
    CHECK(res.plane == doctest::Approx(std::sqrt(2.0)));
    // the same point is unphysical
    const Params p = unrescale(bad, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    CHECK(case1_check(p).det < 0.0);

    Rescaled interior{Complex(0.5), Complex(1.0), Complex(1.0)};
    CHECK_THROWS_AS(boundary_plane_check(interior), DomainError);
    Rescaled undefined{std::nullopt, Complex(1.0), Complex(1.0)};
    CHECK_THROWS_AS(boundary_plane_check(undefined), DomainError);
  }

  TEST_CASE("phase check is vacuous when G or H vanishes") {
    Rescaled r{std::polar(1.0, 0.3), Complex(0.0), Complex(0.0)};
    const auto res = boundary_plane_check(r);
    CHECK(res.plane == 0.0);
    CHECK(res.phase == 0.0);
  }

  TEST_CASE("wrap_angle") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(wrap_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(wrap_angle(2.0 * std::numbers::pi) == doctest::Approx(0.0));
    CHECK(wrap_angle(3.5 * std::numbers::pi) == doctest::Approx(-0.5 * std::numbers::pi));
  }

  TEST_CASE("sample_physical") {
    const auto s = sample_physical(2000, 42);
    REQUIRE(s.states.size() == 2000);
    CHECK(s.attempts >= 2000);
    CHECK(s.acceptance_rate == doctest::Approx(2000.0 / s.attempts));
    for (const auto& p : s.states) {
      REQUIRE(case1_check(p).all());
      REQUIRE(validate(p.matrix()).is_density_matrix());
    }
    const auto again = sample_physical(2000, 42);
    CHECK(again.acceptance_rate == s.acceptance_rate);
    CHECK(again.states.back().h == s.states.back().h);
    CHECK(sample_physical(2000, 43).states.front().a != s.states.front().a);
    CHECK_THROWS_AS(sample_physical(0, 1), DomainError);
  }
}
