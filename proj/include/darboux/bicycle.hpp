#pragma once

#include <optional>

#include "darboux/circle.hpp"
#include "darboux/transform.hpp"

namespace darboux {

struct BicycleResult {
  DarbouxResult darboux;
  // max_n | |xhat_n - x_n|^2 - 1/mu |
  double max_length_deviation = 0.0;
  // max over edges of | |dxhat|^2 - 1/m |
  double max_edge_deviation = 0.0;
};

struct BicycleOptions {
  std::size_t start_vertex = 0;
  std::size_t periods = 1;
  double closure_tol = 1e-8;
  // Tolerance for the arc-length precondition and |direction| = 1.
  double precondition_tol = 1e-9;
};

/// Darboux transform of an arc-length polarised curve with rod length
/// 1/sqrt(mu): T_0 = direction / sqrt(mu). Throws ParameterError unless the
/// curve is arc-length polarised, mu > 0 and |direction| = 1.
BicycleResult bicycle_transform(const PolarisedCurve& curve, double mu, const Quaternion& direction,
                                const BicycleOptions& options = {});

/// Conservation diagnostics of an already computed transform.
void measure_bicycle(const PolarisedCurve& curve, BicycleResult& r);

struct CircletonResult {
  BicycleResult bicycle;  // the closed form, over the l-fold cover
  int M = 0;
  int k = 0;
  int l = 0;
  double tau = 0.0;
  CircletonBranch branch = CircletonBranch::chi;
  // max_n |closed form - Riccati propagation from the same xhat_0|
  double propagation_deviation = 0.0;
};

/// Closed bicycle transform of the planar discrete circle over its l-fold
/// cover at mu = circle_resonance_mu(M, k, l), evaluated from the closed form
/// for n = 0..lM. Needs l > k > 0. Without an explicit branch the c- = 0
/// branch is used exactly when chi is undefined.
CircletonResult discrete_circleton(int M, int k, int l, double tau,
                                   std::optional<CircletonBranch> branch = std::nullopt);

}  // namespace darboux
