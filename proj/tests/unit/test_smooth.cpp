#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "darboux/bicycle.hpp"
#include "darboux/errors.hpp"
#include "darboux/smooth.hpp"
#include "support.hpp"

using namespace darboux;
using namespace darboux::testing;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double rk4_error(double mu, Complex c1m, Complex c1p, std::size_t steps, double t1 = kTwoPi) {
  const SmoothCurve c = smooth_circle();
  const auto traj = rk4_darboux(c, mu, smooth_circle_darboux(0.0, mu, c1m, c1p), uniform_grid(0.0, t1, steps));
  REQUIRE_FALSE(traj.blew_up);
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.t.size(); ++k)
    worst = std::max(worst, dist(traj.xhat[k], smooth_circle_darboux(traj.t[k], mu, c1m, c1p)));
  return worst;
}

}  // namespace

TEST_CASE("parallel section equations on the circle") {
  const SmoothCurve c = smooth_circle();
  const double h = 1e-5;
  for (double mu : {-2.0, -0.4, 0.1, 0.7}) {
    const CircleConstants k{random_complex(), random_complex(), random_complex(), random_complex()};
    const auto dalpha = [&](double t) { return -(c.dx(t) * smooth_circle_section(t, mu, k).second); };
    for (int n = 0; n < 10; ++n) {
      const double t = uniform(0.0, kTwoPi);
      const auto [alpha, beta] = smooth_circle_section(t, mu, k);
      // alpha' from the closed form matches -x' beta.
      const Quaternion fd_alpha =
          (smooth_circle_section(t + h, mu, k).first - smooth_circle_section(t - h, mu, k).first) * (0.5 / h);
      CHECK(dist(fd_alpha, dalpha(t)) < 1e-8 * (1.0 + abs(alpha)));
      // alpha'' from the right-hand side matches a central difference of alpha'.
      const auto [d1, d2] = smooth_parallel_rhs(c, t, alpha, dalpha(t), mu);
      CHECK(d1 == dalpha(t));
      const Quaternion fd2 = (dalpha(t + h) - dalpha(t - h)) * (0.5 / h);
      CHECK(dist(d2, fd2) < 1e-8 * (1.0 + abs(alpha)));
      // beta' = -mu (x^d)' alpha with (x^d)' = (x')^-1 for m = 1.
      const Quaternion fd_beta =
          (smooth_circle_section(t + h, mu, k).second - smooth_circle_section(t - h, mu, k).second) * (0.5 / h);
      CHECK(dist(fd_beta, -mu * (inverse(c.dx(t)) * alpha)) < 1e-8 * (1.0 + abs(alpha)));
    }
  }
  // mu = 0: alpha'' = x'' (x')^-1 alpha'.
  const Quaternion a = random_quaternion(), da = random_quaternion();
  CHECK(dist(smooth_parallel_rhs(c, 0.3, a, da, 0.0).second, c.ddx(0.3) * inverse(c.dx(0.3)) * da) < 1e-15);
}

TEST_CASE("rk4 is fourth order") {
  const double mu = -1.0;
  std::vector<double> errors;
  for (std::size_t n : {250u, 500u, 1000u, 2000u}) errors.push_back(rk4_error(mu, -4.0, 1.0, n));
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    const double order = std::log2(errors[i] / errors[i + 1]);
    CHECK(order > 3.7);
    CHECK(order < 4.3);
  }
}

TEST_CASE("rk4 at mu = 0 is exact") {
  const SmoothCurve c = smooth_torus_knot(2, 3);
  const Quaternion p{0.1, 2.0, -1.0, 0.5};
  const auto traj = rk4_darboux(c, 0.0, p, uniform_grid(0.0, kTwoPi, 100));
  for (const auto& q : traj.xhat) CHECK(q == p);
}

TEST_CASE("smooth resonance k = 3 closes") {
  const double mu = -2.0;
  for (int n = 0; n < 20; ++n) {
    const double t = uniform(0.0, kTwoPi);
    CHECK(dist(smooth_circle_darboux(t, mu, -4.0, 1.0), smooth_circle_darboux(t + kTwoPi, mu, -4.0, 1.0)) < 1e-12);
  }
  const SmoothCurve c = smooth_circle();
  const Quaternion start{0.0, 0.3, 1.7, -0.4};
  const auto traj = rk4_darboux(c, mu, start, uniform_grid(0.0, kTwoPi, 2000));
  REQUIRE_FALSE(traj.blew_up);
  CHECK(dist(traj.xhat.back(), start) < 1e-6);
}

TEST_CASE("single-exponential smooth transform is a circle") {
  for (double mu : {-1.0, 0.1}) {
    const double r0 = abs(smooth_circle_darboux(0.0, mu, 1.0, 0.0));
    for (int n = 0; n < 20; ++n) CHECK(std::abs(abs(smooth_circle_darboux(uniform(0, 7), mu, 1.0, 0.0)) - r0) < 1e-12);
  }
}

TEST_CASE("blow-up is detected") {
  // At mu = -2 (s = 3) the closed-form denominator vanishes at t = 1 for c1m = 2 e^{3i}, c1p = 1.
  const SmoothCurve c = smooth_circle();
  const Complex c1m = 2.0 * std::polar(1.0, 3.0);
  const auto traj = rk4_darboux(c, -2.0, smooth_circle_darboux(0.0, -2.0, c1m, 1.0), uniform_grid(0.0, 2.0, 2000), 50.0);
  CHECK(traj.blew_up);
  REQUIRE(traj.t.size() > 900);
  CHECK(traj.t.size() < 1001);
  CHECK_THROWS_AS(smooth_circle_darboux(1.0, -2.0, c1m, 1.0), TransformAtInfinityError);
  CHECK_THROWS_AS(rk4_darboux(c, 1.0, kOne, {0.0, 0.0}), ParameterError);
}

TEST_CASE("hermitian form is constant along smooth transport") {
  const SmoothCurve c = smooth_torus_knot(2, 3);
  for (double mu : {-1.5, 0.4}) {
    const auto phis = rk4_transport(c, mu, random_quaternion(), random_quaternion(), uniform_grid(0.0, kTwoPi, 8000));
    // The form is indefinite while |phi| can grow by many orders of magnitude,
    // so drift is measured against |phi|^2.
    const double h0 = herm_form(phis.front(), phis.front()).w;
    for (const auto& p : phis) {
      const double scale = std::max({1.0, std::abs(h0), norm_sq(p.top) + norm_sq(p.bottom)});
      CHECK(std::abs(herm_form(p, p).w - h0) < 1e-8 * scale);
    }
  }
  // On the circle the transported section follows the closed form.
  const CircleConstants k{0.0, Complex(0, 0.5), -4.0, 1.0};
  const auto [a0, b0] = smooth_circle_section(0.0, -2.0, k);
  const auto grid = uniform_grid(0.0, kTwoPi, 2000);
  const auto phis = rk4_transport(smooth_circle(), -2.0, a0, b0, grid);
  const auto [a1, b1] = smooth_circle_section(kTwoPi, -2.0, k);
  CHECK(dist(phis.back().bottom, b1) < 1e-8);
  CHECK(dist(phis.back().top, a1 + smooth_circle().x(kTwoPi) * b1) < 1e-8);
}

TEST_CASE("smooth circletons") {
  const double mu = smooth_circleton_mu(1, 2);
  CHECK(mu == 0.1875);
  CHECK_THROWS_AS(smooth_circleton_mu(2, 1), ParameterError);
  const double tau = std::numbers::pi;
  CHECK(std::abs(smooth_circleton(2.0 * kTwoPi, mu, tau) - smooth_circleton(0.0, mu, tau)) < 1e-10);
  for (int n = 0; n < 100; ++n) {
    const double t = uniform(0.0, 2.0 * kTwoPi);
    CHECK(std::norm(smooth_circleton(t, mu, tau) - std::polar(1.0, t)) == doctest::Approx(1.0 / mu).epsilon(1e-10));
  }
  // RK4 keeps the rod length to 1e-6.
  const auto traj = rk4_darboux(smooth_planar_circle(), mu, from_complex(smooth_circleton(0.0, mu, tau)),
                                uniform_grid(0.0, 2.0 * kTwoPi, 4000));
  REQUIRE_FALSE(traj.blew_up);
  for (std::size_t k = 0; k < traj.t.size(); ++k)
    CHECK(std::abs(norm_sq(traj.xhat[k] - from_complex(std::polar(1.0, traj.t[k]))) - 1.0 / mu) < 1e-6);
}

TEST_CASE("discrete circletons approach the smooth ones") {
  const double tau = std::numbers::pi;
  const auto sup_distance = [&](int M) {
    const CircletonResult r = discrete_circleton(M, 1, 2, tau);
    const double mu = smooth_circleton_mu(1, 2);
    double worst = 0.0;
    const auto& v = r.bicycle.darboux.transform.vertices;
    for (std::size_t n = 0; n < v.size(); ++n) {
      const Complex s = smooth_circleton(kTwoPi * static_cast<double>(n) / M, mu, tau);
      worst = std::max(worst, dist(v[n], from_complex(s)));
    }
    return worst;
  };
  const double d36 = sup_distance(36), d360 = sup_distance(360);
  CHECK(d360 < d36);
  CHECK(d360 < 5e-2);
}

TEST_CASE("trajectory CSV") {
  SmoothTrajectory t;
  t.t = {0.0, 0.5};
  t.xhat = {Quaternion(1, 2, 3, 4), Quaternion(0.1, 0, 0, 0)};
  std::ostringstream s;
  write_trajectory_csv(s, t);
  std::istringstream lines(s.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "t,w,x,y,z");
  std::getline(lines, row);
  CHECK(row == "0,1,2,3,4");
}
