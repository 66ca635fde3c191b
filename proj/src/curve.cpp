#include "darboux/curve.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

void check_weights(std::span<const double> weights) {
  int sign = 0;
  for (std::size_t e = 0; e < weights.size(); ++e) {
    const double m = weights[e];
    if (!std::isfinite(m) || m == 0.0) {
      std::ostringstream msg;
      msg << "weight of edge " << e << " must be finite and nonzero (got " << m << ")";
      throw InvariantError(msg.str());
    }
    const int s = m > 0.0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) {
      std::ostringstream msg;
      msg << "weights must share one sign; edge " << e << " has weight " << m;
      throw InvariantError(msg.str());
    }
  }
}

double circle_weight(int M) {
  const double theta = 2.0 * std::numbers::pi / M;
  return 1.0 / (2.0 - 2.0 * std::cos(theta));
}

}  // namespace

PolarisedCurve::PolarisedCurve(std::vector<Quaternion> vertices, std::vector<double> weights, bool closed)
    : vertices_(std::move(vertices)), weights_(std::move(weights)), closed_(closed) {
  const std::size_t nv = vertices_.size();
  if (closed_) {
    if (nv < 3) throw InvariantError("a closed curve needs at least 3 vertices");
    if (weights_.size() != nv) {
      std::ostringstream msg;
      msg << "closed curve with " << nv << " vertices needs " << nv << " weights, got " << weights_.size();
      throw InvariantError(msg.str());
    }
  } else {
    if (nv < 2) throw InvariantError("an open curve needs at least 2 vertices");
    if (weights_.size() + 1 != nv) {
      std::ostringstream msg;
      msg << "open curve with " << nv << " vertices needs " << nv - 1 << " weights, got " << weights_.size();
      throw InvariantError(msg.str());
    }
  }
  for (const auto& v : vertices_) {
    if (!std::isfinite(v.w) || !std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
      throw InvariantError("vertex coordinates must be finite");
  }
  check_weights(weights_);
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    const Quaternion dx = vertices_[e] - vertices_[edge_head(e)];
    if (norm_sq(dx) <= zero_epsilon()) {
      std::ostringstream msg;
      msg << "vertices " << e << " and " << edge_head(e) << " coincide (edge " << e << ")";
      throw DegenerateEdgeError(e, msg.str());
    }
  }
}

PolarisedCurve PolarisedCurve::from_document(const CurveDocument& doc) {
  return PolarisedCurve(doc.vertices, doc.weights, doc.closed);
}

const Quaternion& PolarisedCurve::vertex(std::size_t n) const {
  if (closed_) return vertices_[n % vertices_.size()];
  if (n >= vertices_.size()) throw ParameterError("vertex index out of range");
  return vertices_[n];
}

double PolarisedCurve::weight(std::size_t edge) const {
  if (closed_) return weights_[edge % weights_.size()];
  if (edge >= weights_.size()) throw ParameterError("edge index out of range");
  return weights_[edge];
}

std::size_t PolarisedCurve::edge_head(std::size_t edge) const {
  if (closed_) return (edge + 1) % vertices_.size();
  return edge + 1;
}

std::size_t PolarisedCurve::edge_from_vertex(std::size_t n) const {
  if (closed_) return n % vertices_.size();
  if (n + 1 >= vertices_.size()) throw ParameterError("no forward edge at the last vertex of an open curve");
  return n;
}

EdgeData PolarisedCurve::edge(std::size_t e) const {
  if (!closed_ && e >= weights_.size()) throw ParameterError("edge index out of range");
  const std::size_t i = closed_ ? e % weights_.size() : e;
  const std::size_t j = edge_head(i);
  EdgeData d;
  d.from = i;
  d.to = j;
  d.m = weights_[i];
  d.dx = vertices_[i] - vertices_[j];
  d.dxd = inverse(d.dx) / d.m;
  return d;
}

double PolarisedCurve::diameter() const {
  double best = 0.0;
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b)
      best = std::max(best, abs(vertices_[a] - vertices_[b]));
  return best;
}

EdgeData make_edge(const Quaternion& xi, const Quaternion& xj, double m) {
  EdgeData d;
  d.from = 0;
  d.to = 1;
  d.m = m;
  d.dx = xi - xj;
  if (norm_sq(d.dx) <= zero_epsilon()) throw DegenerateEdgeError(0, "edge endpoints coincide");
  d.dxd = inverse(d.dx) / m;
  return d;
}

PolarisedCurve make_discrete_circle(int M) {
  if (M < 3) throw ParameterError("discrete circle needs M >= 3");
  std::vector<Quaternion> v;
  v.reserve(static_cast<std::size_t>(M));
  for (int n = 0; n < M; ++n) {
    const double phi = 2.0 * std::numbers::pi * n / M;
    v.push_back(kJ * from_complex(std::polar(1.0, phi)));
  }
  return PolarisedCurve(std::move(v), std::vector<double>(static_cast<std::size_t>(M), circle_weight(M)), true);
}

PolarisedCurve make_planar_circle(int M) {
  if (M < 3) throw ParameterError("planar circle needs M >= 3");
  std::vector<Quaternion> v;
  v.reserve(static_cast<std::size_t>(M));
  for (int n = 0; n < M; ++n) v.push_back(from_complex(std::polar(1.0, 2.0 * std::numbers::pi * n / M)));
  return PolarisedCurve(std::move(v), std::vector<double>(static_cast<std::size_t>(M), circle_weight(M)), true);
}

PolarisedCurve make_torus_knot(int p, int q, int M, TorusRadii radii) {
  if (M < 3) throw ParameterError("torus knot needs M >= 3");
  if (p == 0 || q == 0) throw ParameterError("torus knot winding numbers must be nonzero");
  if (!(radii.major > radii.minor) || !(radii.minor > 0.0)) throw ParameterError("torus radii need major > minor > 0");
  std::vector<Quaternion> v;
  v.reserve(static_cast<std::size_t>(M));
  for (int n = 0; n < M; ++n) {
    const double t = 2.0 * std::numbers::pi * n / M;
    const double r = radii.major + radii.minor * std::cos(q * t);
    v.emplace_back(0.0, r * std::cos(p * t), r * std::sin(p * t), radii.minor * std::sin(q * t));
  }
  return make_sampled_curve(std::move(v));
}

PolarisedCurve make_sampled_curve(std::vector<Quaternion> samples, std::optional<std::vector<double>> weights,
                                  bool closed) {
  if (samples.empty()) throw ParameterError("sample list is empty");
  if (weights) return PolarisedCurve(std::move(samples), std::move(*weights), closed);

  const std::size_t n = samples.size();
  const std::size_t edges = closed ? n : n - 1;
  std::vector<double> m(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    const double len2 = norm_sq(samples[e] - samples[(e + 1) % n]);
    if (len2 <= zero_epsilon()) {
      std::ostringstream msg;
      msg << "samples " << e << " and " << (e + 1) % n << " coincide";
      throw DegenerateEdgeError(e, msg.str());
    }
    m[e] = 1.0 / len2;
  }
  return PolarisedCurve(std::move(samples), std::move(m), closed);
}

bool is_arclength_polarised(const PolarisedCurve& curve, double tol) {
  for (std::size_t e = 0; e < curve.edge_count(); ++e) {
    const auto d = curve.edge(e);
    if (std::abs(norm_sq(d.dx) - 1.0 / d.m) > tol) return false;
  }
  return true;
}

}  // namespace darboux
