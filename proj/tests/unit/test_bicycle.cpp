#include <doctest.h>

#include <cmath>
#include <numbers>

#include "darboux/bicycle.hpp"
#include "darboux/errors.hpp"
#include "darboux/spectrum.hpp"
#include "support.hpp"

using namespace darboux;
using namespace darboux::testing;

TEST_CASE("bicycle transform conserves the rod length") {
  const PolarisedCurve c = make_planar_circle(36);
  const double mu = circle_resonance_mu(36, 1, 2);
  BicycleOptions o;
  o.periods = 2;
  const BicycleResult r = bicycle_transform(c, mu, kI, o);
  CHECK(r.max_length_deviation < 1e-10);
  CHECK(r.max_edge_deviation < 1e-10);
  CHECK(r.darboux.max_cross_ratio_residual < 1e-10);

  const PolarisedCurve knot = make_torus_knot(2, 3, 80);
  for (int n = 0; n < 5; ++n) {
    Quaternion d = random_imaginary();
    d = d * (1.0 / abs(d));
    const BicycleResult k = bicycle_transform(knot, uniform(0.5, 4.0), d);
    if (k.darboux.hit_infinity) continue;
    CHECK(k.max_length_deviation < 1e-10);
    CHECK(k.max_edge_deviation < 1e-10);
  }
}

TEST_CASE("bicycle preconditions") {
  const PolarisedCurve c = make_planar_circle(12);
  CHECK_THROWS_AS(bicycle_transform(c, 0.0, kI), ParameterError);
  CHECK_THROWS_AS(bicycle_transform(c, -1.0, kI), ParameterError);
  CHECK_THROWS_AS(bicycle_transform(c, 0.2, 1.1 * kI), ParameterError);
  std::vector<double> w(c.weights().begin(), c.weights().end());
  w[0] *= 2.0;
  const PolarisedCurve bent(std::vector<Quaternion>(c.vertices().begin(), c.vertices().end()), w, true);
  CHECK_THROWS_AS(bicycle_transform(bent, 0.2, kI), ParameterError);
}

TEST_CASE("wrong rod length breaks arc-length polarisation") {
  const PolarisedCurve c = make_planar_circle(36);
  const double mu = circle_resonance_mu(36, 1, 2);
  const Quaternion start = c.vertex(0) + kI * (1.1 / std::sqrt(mu));
  const DarbouxResult r = darboux_transform(c, mu, start);
  BicycleResult b{r, 0.0, 0.0};
  measure_bicycle(c, b);
  CHECK(b.max_length_deviation > 1e-3);
  CHECK(b.max_edge_deviation > 1e-6);
}

TEST_CASE("discrete circletons close and match propagation") {
  for (int M : {7, 15, 36}) {
    for (auto [k, l] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 5}, {4, 5}}) {
      const CircletonResult r = discrete_circleton(M, k, l, std::numbers::pi);
      const DarbouxResult& d = r.bicycle.darboux;
      CHECK(d.transform.vertices.size() == static_cast<std::size_t>(l * M));
      CHECK(d.closed);
      CHECK(d.closure_error < 1e-8);
      CHECK(r.propagation_deviation < 1e-9);
      CHECK(r.bicycle.max_length_deviation < 1e-10);
      CHECK(r.bicycle.max_edge_deviation < 1e-10);
      CHECK(d.max_cross_ratio_residual < 1e-10);
      CHECK(r.branch == CircletonBranch::chi);
    }
  }
}

TEST_CASE("circleton parameters") {
  CHECK_THROWS_AS(discrete_circleton(36, 2, 2, 0.0), ParameterError);
  CHECK_THROWS_AS(discrete_circleton(36, 0, 2, 0.0), ParameterError);
  CHECK_THROWS_AS(discrete_circleton(2, 1, 2, 0.0), ParameterError);
  CHECK_THROWS_AS(circleton_chi(-0.1, 0.0), ParameterError);

  // chi is undefined when e^{i tau}(1 + s) = 2 sqrt(mu), i.e. mu = 1 / (4 cos^2 tau)
  // with tan tau < 0; the other branch takes over.
  const double tau = -0.4;
  const double mu = 1.0 / (4.0 * std::cos(tau) * std::cos(tau));
  CHECK(circleton_chi_singular(mu, tau));
  CHECK_FALSE(circleton_chi_singular(mu, tau + 0.1));
  CHECK_FALSE(circleton_chi_singular(mu, -tau));
  CHECK_THROWS_AS(circleton_chi(mu, tau), ParameterError);
  for (long n = 0; n < 10; ++n) {
    const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * n / 10.0);
    const Complex xh = circleton_closed_form(10, mu, tau, CircletonBranch::c_minus_zero, n);
    CHECK(std::norm(xh - x) == doctest::Approx(1.0 / mu).epsilon(1e-12));
  }
}
