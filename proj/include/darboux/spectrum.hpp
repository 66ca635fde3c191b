#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "darboux/connection.hpp"
#include "darboux/transform.hpp"

namespace darboux {

/// Relative spread below which the monodromy counts as a real scalar.
inline constexpr double kResonanceTol = 1e-8;

struct MultiplierSpectrum {
  // One canonical multiplier per quaternionic eigenline, sorted by argument.
  std::vector<Complex> multipliers;
  // Eigen-sections at the base vertex in the gauged frame: M phi = phi h.
  std::vector<HVec2> sections;
  std::vector<double> residuals;  // |M phi - phi h| / (|M| |phi|)
  double mu = 0.0;
  std::size_t base_vertex = 0;
  std::size_t cover = 1;
  // max |l_a - l_b| / max |l| over the four complex eigenvalues.
  double spread = 0.0;
  bool resonant = false;
};

/// Multipliers of the monodromy at mu.
///
/// The complexified monodromy has eigenvalues {h+, conj h+, h-, conj h-}.
/// They are paired so that each pair is closest to conjugate, and the member
/// with nonnegative imaginary part is kept. Resonance is the collapse of all
/// four eigenvalues to one real value, i.e. the monodromy is a real multiple
/// of the identity; then every section has a multiplier and the reported
/// sections are the affine lifts of x_base + 1 and x_base + i.
MultiplierSpectrum multiplier_spectrum(const PolarisedCurve& curve, double mu, std::size_t base_vertex = 0,
                                       std::size_t cover = 1);

struct ClosedTransform {
  Complex multiplier;
  HVec2 section;
  // Empty when the section projects to infinity at the base vertex.
  std::optional<DarbouxResult> result;
};

struct ClosedTransforms {
  MultiplierSpectrum spectrum;
  std::vector<ClosedTransform> transforms;
};

/// Darboux transforms through the projections of the eigen-sections,
/// propagated over `cover` periods.
ClosedTransforms closed_transforms(const PolarisedCurve& curve, double mu, std::size_t base_vertex = 0,
                                   std::size_t cover = 1, double closure_tol = 1e-8);

/// Spectral values in [lo, hi] where the monodromy over `cover` periods is a
/// real scalar. Scans the spread on grid_steps intervals, refines each local
/// minimum by golden-section search and keeps those below kResonanceTol.
/// Grid points that hit an edge weight are skipped.
std::vector<double> find_resonances(const PolarisedCurve& curve, double lo, double hi, std::size_t grid_steps = 400,
                                    std::size_t cover = 1);

}  // namespace darboux
