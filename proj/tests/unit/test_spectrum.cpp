#include <doctest.h>

#include <cmath>
#include <numbers>

#include "darboux/circle.hpp"
#include "darboux/errors.hpp"
#include "darboux/spectrum.hpp"
#include "support.hpp"

using namespace darboux;
using namespace darboux::testing;

TEST_CASE("resonance values of the discrete circle") {
  CHECK(circle_resonance_mu(12, 3, 1) == doctest::Approx(-3.2320508075688772935).epsilon(1e-14));
  CHECK(circle_resonance_mu(12, 2, 1) == doctest::Approx(-0.91068360252295909784).epsilon(1e-13));
  CHECK(std::abs(circle_resonance_mu(12, 1, 1)) < 1e-15);
  CHECK(circle_resonance_mu(12, 0, 1) == 0.25);
  CHECK(circle_resonance_mu(36, 1, 2) == doctest::Approx(0.18773805762348454462).epsilon(1e-13));
  // M = 10^4, k = 3 differs from the smooth value -2 by about 1.18e-6.
  CHECK(circle_resonance_mu(10000, 3, 1) - (-2.0) == doctest::Approx(-1.1843531125855364e-6).epsilon(1e-6));

  CHECK_THROWS_AS(circle_resonance_mu(2, 1, 1), ParameterError);
  CHECK_THROWS_AS(circle_resonance_mu(12, 1, 0), ParameterError);
  CHECK_THROWS_AS(circle_resonance_mu(12, 6, 1), ParameterError);   // pi/2
  CHECK_THROWS_AS(circle_resonance_mu(12, 18, 1), ParameterError);  // 3 pi/2
  CHECK_NOTHROW(circle_resonance_mu(12, 12, 1));                    // pi
}

TEST_CASE("multiplier spectrum off resonance") {
  const PolarisedCurve c = make_discrete_circle(12);
  const MultiplierSpectrum s = multiplier_spectrum(c, -1.0);
  CHECK_FALSE(s.resonant);
  REQUIRE(s.multipliers.size() == 2);
  for (std::size_t n = 0; n < 2; ++n) {
    CHECK(s.multipliers[n].imag() >= 0.0);
    CHECK(s.residuals[n] < 1e-10);
  }
  // The canonical multiplier of the circle is the power of a0+ (or its conjugate).
  const double theta = 2.0 * std::numbers::pi / 12.0;
  const Complex sr = spectral_root(-1.0);
  Complex h = std::pow(0.5 * (std::polar(1.0, -theta) * (1.0 - sr) + (1.0 + sr)), 12);
  if (h.imag() < 0) h = std::conj(h);
  for (const Complex z : s.multipliers) CHECK(std::abs(z - h) < 1e-9 * std::abs(h));

  const ClosedTransforms ct = closed_transforms(c, -1.0);
  REQUIRE(ct.transforms.size() == 2);
  for (const auto& t : ct.transforms) {
    REQUIRE(t.result.has_value());
    CHECK(t.result->closed);
    CHECK(t.result->max_cross_ratio_residual < 1e-10);
  }
  CHECK(dist(ct.transforms[0].result->transform.vertices[0], ct.transforms[1].result->transform.vertices[0]) > 1e-6);

  // A generic starting point does not close.
  const DarbouxResult generic = darboux_transform(c, -1.0, Quaternion(0.2, -0.4, 0.7, 1.3));
  CHECK(generic.closure_error > 1e-3);
}

TEST_CASE("every section closes at a resonance") {
  const PolarisedCurve c = make_discrete_circle(12);
  const double mu = circle_resonance_mu(12, 3, 1);
  const MultiplierSpectrum s = multiplier_spectrum(c, mu);
  CHECK(s.resonant);
  CHECK(s.spread < 1e-8);
  for (const Complex h : s.multipliers) CHECK(std::abs(h - s.multipliers[0]) < 1e-8 * std::abs(h));
  for (int n = 0; n < 20; ++n) {
    const DarbouxResult r = darboux_transform(c, mu, c.vertex(0) + random_quaternion());
    CHECK(r.closure_error < 1e-8);
  }
}

TEST_CASE("mu = 0: identity monodromy and constant closed transforms") {
  const PolarisedCurve c = make_torus_knot(2, 3, 30);
  const ClosedTransforms ct = closed_transforms(c, 0.0);
  CHECK(ct.spectrum.resonant);
  for (const auto& t : ct.transforms) {
    CHECK(std::abs(t.multiplier - 1.0) < 1e-15);
    REQUIRE(t.result.has_value());
    CHECK(t.result->closed);
    for (const auto& q : t.result->transform.vertices) CHECK(dist(q, t.result->transform.vertices.front()) < 1e-13);
  }
}

TEST_CASE("closed transforms of a torus knot") {
  const PolarisedCurve c = make_torus_knot(2, 3, 48);
  for (double mu : {-0.8, -0.2, 0.05}) {
    const ClosedTransforms ct = closed_transforms(c, mu);
    for (std::size_t n = 0; n < ct.transforms.size(); ++n) {
      CHECK(ct.spectrum.residuals[n] < 1e-10);
      const auto& t = ct.transforms[n];
      if (!t.result) continue;
      CHECK(t.result->closure_error < 1e-8 * c.diameter());
    }
  }
}

TEST_CASE("resonance search") {
  const PolarisedCurve c = make_discrete_circle(12);
  const auto found = find_resonances(c, -5.0, 0.2, 400);
  for (int k : {2, 3}) {
    const double target = circle_resonance_mu(12, k, 1);
    double best = INFINITY;
    for (double mu : found) best = std::min(best, std::abs(mu - target));
    CHECK(best < 1e-8);
  }
  CHECK(find_resonances(c, -0.8, -0.2, 100).empty());
  CHECK(find_resonances(c, 0.1, 0.1, 10).empty());
  CHECK(find_resonances(c, 0.5, 0.1, 10).empty());
  const double k3 = circle_resonance_mu(12, 3, 1);
  REQUIRE(find_resonances(c, k3, k3, 10).size() == 1);

  // Two-fold cover of the 7-gon at the (1, 2) circleton value.
  const PolarisedCurve c7 = make_discrete_circle(7);
  const double target = circle_resonance_mu(7, 1, 2);
  const auto cover = find_resonances(c7, 0.0, 0.24, 200, 2);
  double best = INFINITY;
  for (double mu : cover) best = std::min(best, std::abs(mu - target));
  CHECK(best < 1e-8);
}
