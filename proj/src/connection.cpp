#include "darboux/connection.hpp"

#include <cmath>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

HMat2 ambient_connection(const EdgeData& edge, double lambda) {
  return HMat2::of(kOne, edge.dx, lambda * edge.dxd, kOne);
}

HMat2 ambient_connection(const PolarisedCurve& curve, std::size_t edge, double lambda) {
  return ambient_connection(curve.edge(edge), lambda);
}

HMat2 eta(const Quaternion& xi, const Quaternion& xj, const Quaternion& dxd) {
  const Quaternion xjd = xj * dxd;
  const Quaternion dxi = dxd * xi;
  return HMat2::of(xjd, -(xjd * xi), dxd, -dxi);
}

HMat2 gauged_connection(const PolarisedCurve& curve, std::size_t edge, double lambda) {
  const EdgeData d = curve.edge(edge);
  return HMat2::identity() + lambda * eta(curve.vertex(d.from), curve.vertex(d.to), d.dxd);
}

void require_nondegenerate(const PolarisedCurve& curve, double mu) {
  for (std::size_t e = 0; e < curve.edge_count(); ++e) {
    if (std::abs(mu - curve.weight(e)) <= 1e-12) {
      std::ostringstream msg;
      msg << "spectral parameter " << mu << " equals the weight of edge " << e << " (" << e << " -> "
          << curve.edge_head(e) << ")";
      throw NonDegeneracyError(e, msg.str());
    }
  }
}

std::vector<HVec2> transport(const PolarisedCurve& curve, double mu, std::size_t start_vertex, const HVec2& phi0,
                             const TransportOptions& options) {
  require_nondegenerate(curve, mu);
  if (!curve.closed() && start_vertex >= curve.vertex_count())
    throw ParameterError("transport start vertex out of range");
  std::size_t steps = options.steps;
  if (steps == 0) steps = curve.closed() ? curve.period() : curve.vertex_count() - 1 - start_vertex;
  if (!curve.closed() && start_vertex + steps >= curve.vertex_count())
    throw ParameterError("transport runs past the end of an open curve");

  std::vector<HVec2> out;
  out.reserve(steps + 1);
  // Work in the ambient frame and gauge on output.
  HVec2 phi = options.frame == Frame::gauged ? gauge_inverse(curve.vertex(start_vertex)) * phi0 : phi0;
  const auto emit = [&](std::size_t vertex, const HVec2& p) {
    out.push_back(options.frame == Frame::gauged ? gauge(curve.vertex(vertex)) * p : p);
  };
  emit(start_vertex, phi);
  for (std::size_t k = 0; k < steps; ++k) {
    const std::size_t v = start_vertex + k;
    phi = ambient_connection(curve.edge(curve.edge_from_vertex(v)), mu) * phi;
    if (options.renormalize) {
      const double n = norm(phi);
      if (n > 0.0) phi = phi * Quaternion(1.0 / n);
    }
    emit(v + 1, phi);
  }
  return out;
}

MonodromyMatrix monodromy(const PolarisedCurve& curve, double mu, std::size_t base_vertex, std::size_t cover) {
  if (!curve.closed()) throw ParameterError("monodromy requires a closed curve");
  if (cover == 0) throw ParameterError("monodromy cover must be >= 1");
  require_nondegenerate(curve, mu);
  HMat2 M = HMat2::identity();
  const std::size_t n = curve.period() * cover;
  for (std::size_t k = 0; k < n; ++k) M = gauged_connection(curve, (base_vertex + k) % curve.period(), mu) * M;
  return {M, mu, base_vertex % curve.period(), cover};
}

}  // namespace darboux
