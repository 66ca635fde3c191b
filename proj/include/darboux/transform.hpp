#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "darboux/curve.hpp"

namespace darboux {

/// One step of the discrete Riccati equation dT_ij = -dx_ij + mu T_j dxd_ij T_i,
/// solved for T_j = (T_i + dx)(1 + mu dxd T_i)^-1. T is x_hat - x.
/// Throws TransformAtInfinityError (vertex = edge.to) when the denominator is
/// not invertible.
Quaternion riccati_step(const Quaternion& T_i, const EdgeData& edge, double mu);

/// (a - b)(b - c)^-1 (c - d)(d - a)^-1; for a Darboux quad call it with
/// (x_i, x_j, xhat_j, xhat_i). Throws DegenerateError if a factor to be
/// inverted vanishes.
Quaternion cross_ratio(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d);

struct TransformOptions {
  std::size_t start_vertex = 0;
  // Closed curves: number of periods to propagate.
  std::size_t periods = 1;
  // Closure is decided by |xhat_N - xhat_0| <= closure_tol * diameter(x).
  double closure_tol = 1e-8;
};

struct DarbouxResult {
  // xhat at the traversed vertices: one entry per vertex of the (covered)
  // period for closed curves, every vertex from start_vertex on for open ones.
  // Carries the weights of x. Truncated at the vertex where the transform hit
  // infinity.
  CurveDocument transform;
  double mu = 0.0;
  std::size_t start_vertex = 0;
  std::size_t periods = 1;

  std::vector<double> cross_ratio_residuals;  // |cr - mu/m| per traversed edge
  double max_cross_ratio_residual = 0.0;
  std::size_t degenerate_quads = 0;  // quads whose cross-ratio is undefined

  // max |Re xhat_n| when x lies in Im H and xhat starts there; empty otherwise.
  std::optional<double> sphere_residual;

  bool hit_infinity = false;
  std::optional<std::size_t> infinity_vertex;

  // Closed curves only.
  Quaternion end_point;  // xhat after the last step (back at start_vertex)
  double closure_error = 0.0;
  bool closed = false;
};

/// Darboux transform of `curve` with spectral parameter mu through
/// xhat_start at options.start_vertex, by Riccati propagation.
DarbouxResult darboux_transform(const PolarisedCurve& curve, double mu, const Quaternion& xhat_start,
                                const TransformOptions& options = {});

struct SphereReport {
  bool base_imaginary = false;    // x in Im H
  bool start_imaginary = false;   // Re xhat_0 within tol
  double max_real_part = 0.0;     // max_n |Re xhat_n|
  bool all_imaginary = false;

  // Set when x lies in a coordinate 2-plane of Im H; holds the index (1, 2, 3
  // for i, j, k) of the imaginary unit missing from the plane.
  std::optional<int> plane_normal;
  bool start_in_plane = false;
  double max_plane_deviation = 0.0;
  bool all_in_plane = false;

  // Membership at the start vertex without membership everywhere contradicts
  // sphere persistence; flagged as a numerical inconsistency.
  bool consistency_failure = false;
};

SphereReport sphere_membership(const PolarisedCurve& curve, const DarbouxResult& result, double tol);

}  // namespace darboux
