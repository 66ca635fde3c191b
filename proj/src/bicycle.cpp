#include "darboux/bicycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "darboux/connection.hpp"
#include "darboux/errors.hpp"

namespace darboux {

void measure_bicycle(const PolarisedCurve& curve, BicycleResult& r) {
  const DarbouxResult& d = r.darboux;
  std::vector<Quaternion> pts = d.transform.vertices;
  if (curve.closed() && !d.hit_infinity && !pts.empty()) pts.push_back(d.end_point);

  const double rod = 1.0 / d.mu;
  r.max_length_deviation = 0.0;
  r.max_edge_deviation = 0.0;
  for (std::size_t n = 0; n < pts.size(); ++n) {
    const Quaternion& x = curve.vertex(d.start_vertex + n);
    r.max_length_deviation = std::max(r.max_length_deviation, std::abs(norm_sq(pts[n] - x) - rod));
    if (n + 1 < pts.size()) {
      const double m = curve.weight(curve.edge_from_vertex(d.start_vertex + n));
      r.max_edge_deviation = std::max(r.max_edge_deviation, std::abs(norm_sq(pts[n + 1] - pts[n]) - 1.0 / m));
    }
  }
}

BicycleResult bicycle_transform(const PolarisedCurve& curve, double mu, const Quaternion& direction,
                                const BicycleOptions& options) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ParameterError("bicycle transform needs mu > 0");
  if (!is_arclength_polarised(curve, options.precondition_tol))
    throw ParameterError("bicycle transform needs an arc-length polarised curve");
  if (std::abs(abs(direction) - 1.0) > options.precondition_tol)
    throw ParameterError("bicycle direction must be a unit quaternion");

  TransformOptions t;
  t.start_vertex = options.start_vertex;
  t.periods = options.periods;
  t.closure_tol = options.closure_tol;
  const Quaternion T0 = direction * (1.0 / std::sqrt(mu));

  BicycleResult r;
  r.darboux = darboux_transform(curve, mu, curve.vertex(options.start_vertex) + T0, t);
  measure_bicycle(curve, r);
  return r;
}

CircletonResult discrete_circleton(int M, int k, int l, double tau, std::optional<CircletonBranch> branch) {
  if (!(l > k && k > 0)) throw ParameterError("circletons need l > k > 0");
  if (!std::isfinite(tau)) throw ParameterError("tau must be finite");
  const double mu = circle_resonance_mu(M, k, l);
  if (!(mu > 0.0)) throw ParameterError("circleton parameter is not positive");

  CircletonResult out;
  out.M = M;
  out.k = k;
  out.l = l;
  out.tau = tau;
  out.branch = branch.value_or(circleton_chi_singular(mu, tau) ? CircletonBranch::c_minus_zero
                                                                : CircletonBranch::chi);

  const PolarisedCurve curve = make_planar_circle(M);
  require_nondegenerate(curve, mu);
  const std::size_t steps = static_cast<std::size_t>(l) * static_cast<std::size_t>(M);

  std::vector<Quaternion> xhat(steps + 1);
  for (std::size_t n = 0; n <= steps; ++n)
    xhat[n] = from_complex(circleton_closed_form(M, mu, tau, out.branch, static_cast<long>(n)));

  DarbouxResult& d = out.bicycle.darboux;
  d.mu = mu;
  d.start_vertex = 0;
  d.periods = static_cast<std::size_t>(l);
  d.transform.closed = true;
  d.transform.vertices.assign(xhat.begin(), xhat.end() - 1);
  d.transform.weights.assign(steps, curve.weight(0));
  d.end_point = xhat.back();
  d.closure_error = abs(d.end_point - xhat.front());
  d.closed = d.closure_error <= 1e-8 * curve.diameter();
  for (std::size_t n = 0; n < steps; ++n) {
    const EdgeData e = curve.edge(curve.edge_from_vertex(n));
    try {
      const Quaternion cr = cross_ratio(curve.vertex(n), curve.vertex(n + 1), xhat[n + 1], xhat[n]);
      const double res = abs(cr - Quaternion(mu / e.m));
      d.cross_ratio_residuals.push_back(res);
      d.max_cross_ratio_residual = std::max(d.max_cross_ratio_residual, res);
    } catch (const DegenerateError&) {
      d.cross_ratio_residuals.push_back(std::numeric_limits<double>::quiet_NaN());
      ++d.degenerate_quads;
    }
  }
  measure_bicycle(curve, out.bicycle);

  TransformOptions t;
  t.periods = static_cast<std::size_t>(l);
  const DarbouxResult prop = darboux_transform(curve, mu, xhat.front(), t);
  if (prop.hit_infinity) {
    out.propagation_deviation = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t n = 0; n < steps; ++n)
      out.propagation_deviation = std::max(out.propagation_deviation, abs(prop.transform.vertices[n] - xhat[n]));
    out.propagation_deviation = std::max(out.propagation_deviation, abs(prop.end_point - xhat.back()));
  }
  return out;
}

}  // namespace darboux
