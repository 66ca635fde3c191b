#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "darboux/circle.hpp"
#include "darboux/curve.hpp"
#include "darboux/homog.hpp"

namespace darboux {

// Smooth polarised curves, used as an oracle for the discrete machinery.
// Polarisation q = dt^2 / m, dual curve (x^d)' = (1/m) (x')^-1.

struct SmoothCurve {
  std::function<Quaternion(double)> x;
  std::function<Quaternion(double)> dx;   // x'
  std::function<Quaternion(double)> ddx;  // x''
  std::function<double(double)> m;
};

SmoothCurve smooth_circle();         // j e^{it}, m = 1
SmoothCurve smooth_planar_circle();  // e^{it}, m = 1
/// Continuous counterpart of make_torus_knot, t in [0, 2 pi), arc-length polarised.
SmoothCurve smooth_torus_knot(int p, int q, TorusRadii radii = {});

/// (alpha', alpha'') for alpha'' = x'' (x')^-1 alpha' + (mu/m) alpha.
/// Throws DegenerateError if x'(t) vanishes.
std::pair<Quaternion, Quaternion> smooth_parallel_rhs(const SmoothCurve& c, double t, const Quaternion& alpha,
                                                      const Quaternion& dalpha, double mu);

/// n + 1 equally spaced points from t0 to t1.
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

struct SmoothTrajectory {
  std::vector<double> t;
  std::vector<Quaternion> xhat;
  bool blew_up = false;  // |T| passed the threshold; samples stop before it
};

/// Classical RK4 on xhat' = mu T (x^d)' T with T = xhat - x, one step per
/// grid interval. Stops with partial output once |T| > blowup.
SmoothTrajectory rk4_darboux(const SmoothCurve& c, double mu, const Quaternion& xhat0, const std::vector<double>& grid,
                             double blowup = 1e6);

/// RK4 on alpha' = -x' beta, beta' = -mu (x^d)' alpha. Returns the sections
/// phi = e alpha + psi beta = (alpha + x beta, beta) at the grid points.
std::vector<HVec2> rk4_transport(const SmoothCurve& c, double mu, const Quaternion& alpha0, const Quaternion& beta0,
                                 const std::vector<double>& grid);

/// Explicit (alpha, beta) on the circle j e^{it} for the four constants.
std::pair<Quaternion, Quaternion> smooth_circle_section(double t, double mu, const CircleConstants& c);

/// xhat(t) = j (-e^{it}(c1p (1-s) e^{ist} + c1m (1+s)) / (c1p (1+s) e^{ist} + c1m (1-s))).
/// Throws TransformAtInfinityError (vertex 0) if the denominator vanishes.
Quaternion smooth_circle_darboux(double t, double mu, Complex c1m, Complex c1p);

/// mu = (l^2 - k^2) / (4 l^2); requires l > k > 0.
double smooth_circleton_mu(int k, int l);

/// Planar bicycle transform of e^{it}:
/// xhat = e^{it}(chi (s-1) e^{ist} - (s+1)) / (chi (s+1) e^{ist} - (s-1)),
/// or -e^{it}(1-s)/(1+s) on the c- = 0 branch.
Complex smooth_circleton(double t, double mu, double tau, CircletonBranch branch = CircletonBranch::chi);

/// Writes "t,w,x,y,z" rows with round-trip precision.
void write_trajectory_csv(std::ostream& out, const SmoothTrajectory& traj);

}  // namespace darboux
