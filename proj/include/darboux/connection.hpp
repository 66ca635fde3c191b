#pragma once

#include <cstddef>
#include <vector>

#include "darboux/curve.hpp"
#include "darboux/homog.hpp"

namespace darboux {

/// D^lambda on the oriented edge i -> j: identity plus the off-diagonal block
/// [[0, dx_ij], [lambda dxd_ij, 0]]. D^lambda_ij D^lambda_ji = (1 - lambda/m) id,
/// so it only defines a connection projectively.
HMat2 ambient_connection(const EdgeData& edge, double lambda);
HMat2 ambient_connection(const PolarisedCurve& curve, std::size_t edge, double lambda);

/// Gauge G = (e psi) = [[1, x], [0, 1]] at a vertex with position x.
constexpr HMat2 gauge(const Quaternion& x) { return HMat2::of(kOne, x, Quaternion{}, kOne); }
constexpr HMat2 gauge_inverse(const Quaternion& x) { return HMat2::of(kOne, -x, Quaternion{}, kOne); }

/// eta_ji = [[x_j dxd, -x_j dxd x_i], [dxd, -dxd x_i]]; ker = psi_i H, im = psi_j H.
HMat2 eta(const Quaternion& xi, const Quaternion& xj, const Quaternion& dxd);

/// d^lambda_ji = id + lambda eta_ji = G_j D^lambda_ji G_i^-1.
HMat2 gauged_connection(const PolarisedCurve& curve, std::size_t edge, double lambda);

/// Throws NonDegeneracyError naming the first edge with |mu - m| <= 1e-12.
void require_nondegenerate(const PolarisedCurve& curve, double mu);

enum class Frame { ambient, gauged };

struct TransportOptions {
  Frame frame = Frame::ambient;
  // Divide each section by its norm after every step (projectively harmless).
  bool renormalize = false;
  // Number of edges to traverse; 0 means one period (closed) or to the last
  // vertex (open).
  std::size_t steps = 0;
};

/// Parallel transport of phi0 (given at start_vertex, in the requested frame)
/// along successive forward edges. Returns steps + 1 sections; entry k lives at
/// vertex start_vertex + k.
std::vector<HVec2> transport(const PolarisedCurve& curve, double mu, std::size_t start_vertex, const HVec2& phi0,
                             const TransportOptions& options = {});

struct MonodromyMatrix {
  HMat2 matrix;
  double mu = 0.0;
  std::size_t base_vertex = 0;
  std::size_t cover = 1;  // number of periods traversed
};

/// Ordered product of d^mu over `cover` periods, starting at base_vertex
/// (the first edge is applied first). Requires a closed curve.
MonodromyMatrix monodromy(const PolarisedCurve& curve, double mu, std::size_t base_vertex = 0,
                          std::size_t cover = 1);

}  // namespace darboux
