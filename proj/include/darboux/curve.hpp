#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "darboux/quat.hpp"

namespace darboux {

/// Raw curve data as stored in a curve document. Unlike PolarisedCurve it
/// carries no invariants, so it can hold degenerate output (e.g. the constant
/// transform at mu = 0).
struct CurveDocument {
  bool closed = false;
  std::vector<Quaternion> vertices;
  std::vector<double> weights;
};

/// Quantities on the oriented edge i -> j.
struct EdgeData {
  std::size_t from = 0;
  std::size_t to = 0;
  Quaternion dx;   // x_i - x_j
  Quaternion dxd;  // (1/m) dx^-1
  double m = 0.0;

  // The same edge traversed j -> i.
  EdgeData reversed() const { return {to, from, -dx, -dxd, m}; }
};

/// Discrete curve x_n with polarisation weights m on the unoriented edges.
/// Edge e joins vertex e and e + 1 (mod the period when closed).
///
/// Invariants, checked on construction:
///  - closed: #weights == #vertices >= 3 (the last edge wraps to vertex 0);
///    open: #weights == #vertices - 1 >= 1.
///  - weights finite, nonzero and of one sign.
///  - consecutive vertices distinct.
class PolarisedCurve {
 public:
  PolarisedCurve(std::vector<Quaternion> vertices, std::vector<double> weights, bool closed);

  static PolarisedCurve from_document(const CurveDocument& doc);
  CurveDocument to_document() const { return {closed_, vertices_, weights_}; }

  bool closed() const { return closed_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return weights_.size(); }
  // Number of vertices of one period; only meaningful for closed curves.
  std::size_t period() const { return vertices_.size(); }

  std::span<const Quaternion> vertices() const { return vertices_; }
  std::span<const double> weights() const { return weights_; }

  // Vertex n; closed curves wrap n modulo the period.
  const Quaternion& vertex(std::size_t n) const;
  double weight(std::size_t edge) const;
  std::size_t edge_head(std::size_t edge) const;
  EdgeData edge(std::size_t edge) const;

  // Index of the edge leaving vertex n in the forward direction.
  std::size_t edge_from_vertex(std::size_t n) const;

  // Largest distance between two vertices.
  double diameter() const;

 private:
  std::vector<Quaternion> vertices_;
  std::vector<double> weights_;
  bool closed_;
};

/// Edge quantities for x_i -> x_j with weight m. Throws DegenerateEdgeError
/// (edge index 0) when the points coincide.
EdgeData make_edge(const Quaternion& xi, const Quaternion& xj, double m);

/// x_n = j e^{2 pi i n / M}, m = |1 - e^{2 pi i / M}|^-2 (arc-length polarised).
PolarisedCurve make_discrete_circle(int M);

/// x_n = e^{2 pi i n / M} in span{1, i}, same weights as the discrete circle.
PolarisedCurve make_planar_circle(int M);

struct TorusRadii {
  double major = 2.0;
  double minor = 1.0;
};

/// (p, q) torus knot in Im H sampled at M uniform parameter values,
/// arc-length polarised.
PolarisedCurve make_torus_knot(int p, int q, int M, TorusRadii radii = {});

/// Closed (or open) curve through the samples. Without weights the curve is
/// arc-length polarised, m = 1/|dx|^2.
PolarisedCurve make_sampled_curve(std::vector<Quaternion> samples,
                                  std::optional<std::vector<double>> weights = std::nullopt,
                                  bool closed = true);

/// | |dx|^2 - 1/m | <= tol on every edge.
bool is_arclength_polarised(const PolarisedCurve& curve, double tol);

}  // namespace darboux
