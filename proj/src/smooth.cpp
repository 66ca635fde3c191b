#include "darboux/smooth.hpp"

#include <cmath>
#include <iomanip>
#include <limits>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

Complex cexp_i(Complex z) { return std::exp(Complex(0.0, 1.0) * z); }

Quaternion dual_derivative(const SmoothCurve& c, double t) { return (1.0 / c.m(t)) * inverse(c.dx(t)); }

}  // namespace

SmoothCurve smooth_circle() {
  return {[](double t) { return kJ * from_complex(std::polar(1.0, t)); },
          [](double t) { return kJ * from_complex(Complex(0.0, 1.0) * std::polar(1.0, t)); },
          [](double t) { return kJ * from_complex(-std::polar(1.0, t)); },
          [](double) { return 1.0; }};
}

SmoothCurve smooth_planar_circle() {
  return {[](double t) { return from_complex(std::polar(1.0, t)); },
          [](double t) { return from_complex(Complex(0.0, 1.0) * std::polar(1.0, t)); },
          [](double t) { return from_complex(-std::polar(1.0, t)); },
          [](double) { return 1.0; }};
}

SmoothCurve smooth_torus_knot(int p, int q, TorusRadii radii) {
  const double P = p, Q = q, R = radii.major, a = radii.minor;
  auto x = [=](double t) {
    const double r = R + a * std::cos(Q * t);
    return Quaternion{0.0, r * std::cos(P * t), r * std::sin(P * t), a * std::sin(Q * t)};
  };
  auto dx = [=](double t) {
    const double r = R + a * std::cos(Q * t);
    const double dr = -a * Q * std::sin(Q * t);
    const double c = std::cos(P * t), s = std::sin(P * t);
    return Quaternion{0.0, dr * c - P * r * s, dr * s + P * r * c, a * Q * std::cos(Q * t)};
  };
  auto ddx = [=](double t) {
    const double r = R + a * std::cos(Q * t);
    const double dr = -a * Q * std::sin(Q * t);
    const double ddr = -a * Q * Q * std::cos(Q * t);
    const double c = std::cos(P * t), s = std::sin(P * t);
    return Quaternion{0.0, ddr * c - 2.0 * P * dr * s - P * P * r * c, ddr * s + 2.0 * P * dr * c - P * P * r * s,
                      -a * Q * Q * std::sin(Q * t)};
  };
  auto m = [dx](double t) { return 1.0 / norm_sq(dx(t)); };
  return {x, dx, ddx, m};
}

std::pair<Quaternion, Quaternion> smooth_parallel_rhs(const SmoothCurve& c, double t, const Quaternion& alpha,
                                                      const Quaternion& dalpha, double mu) {
  const Quaternion ddalpha = c.ddx(t) * inverse(c.dx(t)) * dalpha + (mu / c.m(t)) * alpha;
  return {dalpha, ddalpha};
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
  if (n == 0) throw ParameterError("grid needs at least one interval");
  std::vector<double> g(n + 1);
  for (std::size_t k = 0; k <= n; ++k) g[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(n);
  return g;
}

SmoothTrajectory rk4_darboux(const SmoothCurve& c, double mu, const Quaternion& xhat0, const std::vector<double>& grid,
                             double blowup) {
  if (grid.empty()) throw ParameterError("empty time grid");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1])) throw ParameterError("time grid must be strictly increasing");

  // Integrating xhat itself keeps mu = 0 exact.
  const auto f = [&](double t, const Quaternion& X) {
    const Quaternion T = X - c.x(t);
    return mu * (T * dual_derivative(c, t) * T);
  };

  SmoothTrajectory out;
  Quaternion X = xhat0;
  out.t.push_back(grid.front());
  out.xhat.push_back(xhat0);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double t = grid[k - 1];
    const double h = grid[k] - t;
    const Quaternion k1 = f(t, X);
    const Quaternion k2 = f(t + 0.5 * h, X + (0.5 * h) * k1);
    const Quaternion k3 = f(t + 0.5 * h, X + (0.5 * h) * k2);
    const Quaternion k4 = f(t + h, X + h * k3);
    X = X + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!(abs(X - c.x(grid[k])) <= blowup)) {
      out.blew_up = true;
      break;
    }
    out.t.push_back(grid[k]);
    out.xhat.push_back(X);
  }
  return out;
}

std::vector<HVec2> rk4_transport(const SmoothCurve& c, double mu, const Quaternion& alpha0, const Quaternion& beta0,
                                 const std::vector<double>& grid) {
  if (grid.empty()) throw ParameterError("empty time grid");
  const auto f = [&](double t, const HVec2& ab) {
    return HVec2{-(c.dx(t) * ab.bottom), -mu * (dual_derivative(c, t) * ab.top)};
  };
  const auto axpy = [](const HVec2& y, double h, const HVec2& k) { return y + HVec2{h * k.top, h * k.bottom}; };
  const auto lift = [&](double t, const HVec2& ab) { return HVec2{ab.top + c.x(t) * ab.bottom, ab.bottom}; };

  std::vector<HVec2> out;
  HVec2 ab{alpha0, beta0};
  out.push_back(lift(grid.front(), ab));
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double t = grid[k - 1];
    const double h = grid[k] - t;
    const HVec2 k1 = f(t, ab);
    const HVec2 k2 = f(t + 0.5 * h, axpy(ab, 0.5 * h, k1));
    const HVec2 k3 = f(t + 0.5 * h, axpy(ab, 0.5 * h, k2));
    const HVec2 k4 = f(t + h, axpy(ab, h, k3));
    ab = axpy(ab, h / 6.0, k1 + k2 + k2 + k3 + k3 + k4);
    out.push_back(lift(grid[k], ab));
  }
  return out;
}

std::pair<Quaternion, Quaternion> smooth_circle_section(double t, double mu, const CircleConstants& c) {
  const Complex s = spectral_root(mu);
  const Complex a0m = cexp_i(0.5 * (-1.0 - s) * t), a0p = cexp_i(0.5 * (-1.0 + s) * t);
  const Complex a1m = cexp_i(0.5 * (1.0 - s) * t), a1p = cexp_i(0.5 * (1.0 + s) * t);
  const Complex alpha0 = c.c0m * a0m + c.c0p * a0p;
  const Complex alpha1 = c.c1m * a1m + c.c1p * a1p;
  const Complex beta0 = -0.5 * std::polar(1.0, -t) * (c.c1m * (1.0 - s) * a1m + c.c1p * (1.0 + s) * a1p);
  const Complex beta1 = 0.5 * std::polar(1.0, t) * (c.c0m * (1.0 + s) * a0m + c.c0p * (1.0 - s) * a0p);
  return {join(alpha0, alpha1), join(beta0, beta1)};
}

Quaternion smooth_circle_darboux(double t, double mu, Complex c1m, Complex c1p) {
  const Complex s = spectral_root(mu);
  const Complex e = cexp_i(s * t);
  const Complex num = c1p * (1.0 - s) * e + c1m * (1.0 + s);
  const Complex den = c1p * (1.0 + s) * e + c1m * (1.0 - s);
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)))
    throw TransformAtInfinityError(0, "smooth circle transform passes through infinity");
  return kJ * from_complex(-std::polar(1.0, t) * num / den);
}

double smooth_circleton_mu(int k, int l) {
  if (!(l > k && k > 0)) throw ParameterError("circletons need l > k > 0");
  return static_cast<double>(l * l - k * k) / (4.0 * l * l);
}

Complex smooth_circleton(double t, double mu, double tau, CircletonBranch branch) {
  const Complex s = spectral_root(mu);
  const Complex rot = std::polar(1.0, t);
  if (branch == CircletonBranch::c_minus_zero) return -rot * (1.0 - s) / (1.0 + s);
  const Complex chi = circleton_chi(mu, tau);
  const Complex e = cexp_i(s * t);
  const Complex num = chi * (s - 1.0) * e - (s + 1.0);
  const Complex den = chi * (s + 1.0) * e - (s - 1.0);
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)))
    throw TransformAtInfinityError(0, "smooth circleton passes through infinity");
  return rot * num / den;
}

void write_trajectory_csv(std::ostream& out, const SmoothTrajectory& traj) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "t,w,x,y,z\n";
  for (std::size_t k = 0; k < traj.t.size(); ++k) {
    const Quaternion& q = traj.xhat[k];
    out << traj.t[k] << ',' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << '\n';
  }
  out.precision(old);
}

}  // namespace darboux
