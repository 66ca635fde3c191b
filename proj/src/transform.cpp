#include "darboux/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "darboux/connection.hpp"
#include "darboux/errors.hpp"

namespace darboux {

Quaternion riccati_step(const Quaternion& T_i, const EdgeData& edge, double mu) {
  const Quaternion denom = kOne + mu * (edge.dxd * T_i);
  const double n = norm_sq(denom);
  if (n <= zero_epsilon() || n == 0.0) {
    std::ostringstream msg;
    msg << "Riccati denominator vanishes on edge " << edge.from << " -> " << edge.to
        << ": the transform passes through infinity";
    throw TransformAtInfinityError(edge.to, msg.str());
  }
  return (T_i + edge.dx) * inverse(denom);
}

Quaternion cross_ratio(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d) {
  return (a - b) * inverse(b - c) * (c - d) * inverse(d - a);
}

namespace {

bool curve_is_imaginary(const PolarisedCurve& curve, double tol) {
  return std::all_of(curve.vertices().begin(), curve.vertices().end(),
                     [tol](const Quaternion& q) { return is_imaginary(q, tol); });
}

double component(const Quaternion& q, int idx) {
  switch (idx) {
    case 0: return q.w;
    case 1: return q.x;
    case 2: return q.y;
    default: return q.z;
  }
}

}  // namespace

DarbouxResult darboux_transform(const PolarisedCurve& curve, double mu, const Quaternion& xhat_start,
                                const TransformOptions& options) {
  require_nondegenerate(curve, mu);
  if (options.periods == 0) throw ParameterError("periods must be >= 1");
  const std::size_t start = options.start_vertex;
  if (start >= curve.vertex_count()) throw ParameterError("start vertex out of range");

  const std::size_t steps =
      curve.closed() ? curve.period() * options.periods : curve.vertex_count() - 1 - start;

  DarbouxResult r;
  r.mu = mu;
  r.start_vertex = start;
  r.periods = curve.closed() ? options.periods : 1;
  r.transform.closed = curve.closed();

  Quaternion T = xhat_start - curve.vertex(start);
  r.transform.vertices.reserve(steps + 1);
  r.transform.vertices.push_back(xhat_start);
  r.cross_ratio_residuals.reserve(steps);

  Quaternion xhat_i = xhat_start;
  for (std::size_t k = 0; k < steps; ++k) {
    const EdgeData e = curve.edge(curve.edge_from_vertex(start + k));
    Quaternion T_next;
    try {
      T_next = riccati_step(T, e, mu);
    } catch (const TransformAtInfinityError&) {
      r.hit_infinity = true;
      r.infinity_vertex = (start + k + 1) % std::max<std::size_t>(curve.vertex_count(), 1);
      break;
    }
    const Quaternion& xi = curve.vertex(e.from);
    const Quaternion& xj = curve.vertex(e.to);
    const Quaternion xhat_j = xj + T_next;
    if (!curve.closed() || k + 1 < steps) {
      r.transform.vertices.push_back(xhat_j);
      r.transform.weights.push_back(e.m);
    } else {
      r.transform.weights.push_back(e.m);
      r.end_point = xhat_j;
    }
    try {
      const Quaternion cr = cross_ratio(xi, xj, xhat_j, xhat_i);
      const double res = abs(cr - Quaternion(mu / e.m));
      r.cross_ratio_residuals.push_back(res);
      r.max_cross_ratio_residual = std::max(r.max_cross_ratio_residual, res);
    } catch (const DegenerateError&) {
      r.cross_ratio_residuals.push_back(std::numeric_limits<double>::quiet_NaN());
      ++r.degenerate_quads;
    }
    T = T_next;
    xhat_i = xhat_j;
  }

  if (r.hit_infinity) {
    // Keep only fully determined vertices; weights follow the open convention.
    r.transform.closed = false;
    r.transform.weights.resize(r.transform.vertices.empty() ? 0 : r.transform.vertices.size() - 1);
    r.closure_error = std::numeric_limits<double>::infinity();
    r.closed = false;
  } else if (curve.closed()) {
    r.closure_error = abs(r.end_point - xhat_start);
    r.closed = r.closure_error <= options.closure_tol * std::max(curve.diameter(), 1e-300);
  }

  const double scale_tol = 1e-12;
  if (curve_is_imaginary(curve, scale_tol) && is_imaginary(xhat_start, scale_tol)) {
    double worst = 0.0;
    for (const auto& q : r.transform.vertices) worst = std::max(worst, std::abs(q.w));
    if (curve.closed() && !r.hit_infinity) worst = std::max(worst, std::abs(r.end_point.w));
    r.sphere_residual = worst;
  }
  return r;
}

SphereReport sphere_membership(const PolarisedCurve& curve, const DarbouxResult& result, double tol) {
  SphereReport rep;
  rep.base_imaginary = curve_is_imaginary(curve, tol);
  const auto& pts = result.transform.vertices;
  if (pts.empty()) return rep;

  rep.start_imaginary = is_imaginary(pts.front(), tol);
  for (const auto& q : pts) rep.max_real_part = std::max(rep.max_real_part, std::abs(q.w));
  rep.all_imaginary = rep.max_real_part <= tol;

  if (rep.base_imaginary) {
    for (int idx = 1; idx <= 3; ++idx) {
      const bool flat = std::all_of(curve.vertices().begin(), curve.vertices().end(),
                                    [&](const Quaternion& q) { return std::abs(component(q, idx)) <= tol; });
      if (flat) {
        rep.plane_normal = idx;
        break;
      }
    }
  }
  if (rep.plane_normal) {
    const auto dev = [&](const Quaternion& q) { return std::max(std::abs(q.w), std::abs(component(q, *rep.plane_normal))); };
    rep.start_in_plane = dev(pts.front()) <= tol;
    for (const auto& q : pts) rep.max_plane_deviation = std::max(rep.max_plane_deviation, dev(q));
    rep.all_in_plane = rep.max_plane_deviation <= tol;
  }

  if (rep.base_imaginary) {
    if (rep.start_imaginary && !rep.all_imaginary) rep.consistency_failure = true;
    if (rep.plane_normal && rep.start_in_plane && !rep.all_in_plane) rep.consistency_failure = true;
  }
  return rep;
}

}  // namespace darboux
