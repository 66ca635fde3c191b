#include "darboux/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "darboux/errors.hpp"
#include "darboux/small_eigen.hpp"

namespace darboux {

namespace {

double relative_spread(const std::vector<EigenPair>& pairs) {
  double scale = 0.0;
  double spread = 0.0;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    scale = std::max(scale, std::abs(pairs[a].value));
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      spread = std::max(spread, std::abs(pairs[a].value - pairs[b].value));
  }
  return scale > 0.0 ? spread / scale : spread;
}

double section_residual(const HMat2& M, const HVec2& phi, Complex h) {
  const HVec2 r = M * phi - phi * from_complex(h);
  const double denom = std::max(norm(M) * norm(phi), std::numeric_limits<double>::min());
  return norm(r) / denom;
}

double spread_at(const PolarisedCurve& curve, double mu, std::size_t cover) {
  const MonodromyMatrix mono = monodromy(curve, mu, 0, cover);
  return relative_spread(eig_small(complexify(mono.matrix)));
}

}  // namespace

MultiplierSpectrum multiplier_spectrum(const PolarisedCurve& curve, double mu, std::size_t base_vertex,
                                       std::size_t cover) {
  const MonodromyMatrix mono = monodromy(curve, mu, base_vertex, cover);
  const std::vector<EigenPair> pairs = eig_small(complexify(mono.matrix));

  MultiplierSpectrum spec;
  spec.mu = mu;
  spec.base_vertex = mono.base_vertex;
  spec.cover = cover;
  spec.spread = relative_spread(pairs);
  spec.resonant = spec.spread <= kResonanceTol;

  if (spec.resonant) {
    double h = 0.0;
    for (const auto& p : pairs) h += p.value.real();
    h /= static_cast<double>(pairs.size());
    const Quaternion x = curve.vertex(mono.base_vertex);
    for (const Quaternion& u : {kOne, kI}) {
      const HVec2 phi = affine_lift(x + u);
      spec.multipliers.emplace_back(h, 0.0);
      spec.sections.push_back(phi);
      spec.residuals.push_back(section_residual(mono.matrix, phi, h));
    }
    return spec;
  }

  // Perfect matchings of four eigenvalues; pick the most nearly conjugate one.
  static constexpr std::array<std::array<int, 4>, 3> kMatchings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  const auto cost = [&](const std::array<int, 4>& m) {
    double c = 0.0;
    for (int p = 0; p < 4; p += 2)
      c += std::abs(pairs[static_cast<std::size_t>(m[p])].value - std::conj(pairs[static_cast<std::size_t>(m[p + 1])].value));
    return c;
  };
  const auto best = *std::min_element(kMatchings.begin(), kMatchings.end(),
                                       [&](const auto& a, const auto& b) { return cost(a) < cost(b); });

  std::vector<std::pair<Complex, HVec2>> lines;
  for (int p = 0; p < 4; p += 2) {
    const EigenPair& a = pairs[static_cast<std::size_t>(best[p])];
    const EigenPair& b = pairs[static_cast<std::size_t>(best[p + 1])];
    const EigenPair& keep = a.value.imag() >= b.value.imag() ? a : b;
    lines.emplace_back(keep.value, decomplexify_vector(keep.vector));
  }
  std::sort(lines.begin(), lines.end(),
            [](const auto& a, const auto& b) { return std::arg(a.first) < std::arg(b.first); });
  for (const auto& [h, phi] : lines) {
    spec.multipliers.push_back(h);
    spec.sections.push_back(phi);
    spec.residuals.push_back(section_residual(mono.matrix, phi, h));
  }
  return spec;
}

ClosedTransforms closed_transforms(const PolarisedCurve& curve, double mu, std::size_t base_vertex,
                                   std::size_t cover, double closure_tol) {
  ClosedTransforms out;
  out.spectrum = multiplier_spectrum(curve, mu, base_vertex, cover);
  TransformOptions opts;
  opts.start_vertex = out.spectrum.base_vertex;
  opts.periods = cover;
  opts.closure_tol = closure_tol;
  for (std::size_t n = 0; n < out.spectrum.sections.size(); ++n) {
    ClosedTransform ct{out.spectrum.multipliers[n], out.spectrum.sections[n], std::nullopt};
    // Gauged-frame section: its projection is xhat itself.
    const ProjPoint p = project(ct.section);
    if (!p.at_infinity()) ct.result = darboux_transform(curve, mu, *p.affine, opts);
    out.transforms.push_back(std::move(ct));
  }
  return out;
}

std::vector<double> find_resonances(const PolarisedCurve& curve, double lo, double hi, std::size_t grid_steps,
                                    std::size_t cover) {
  std::vector<double> found;
  if (!curve.closed()) throw ParameterError("find_resonances requires a closed curve");
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) return found;

  const auto f = [&](double mu) {
    try {
      return spread_at(curve, mu, cover);
    } catch (const NonDegeneracyError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  if (lo == hi || grid_steps == 0) {
    if (f(lo) <= kResonanceTol) found.push_back(lo);
    return found;
  }

  std::vector<double> grid(grid_steps + 1);
  std::vector<double> val(grid_steps + 1);
  for (std::size_t k = 0; k <= grid_steps; ++k) {
    grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid_steps);
    val[k] = f(grid[k]);
  }

  constexpr double kInvPhi = 0.6180339887498949;
  for (std::size_t k = 0; k <= grid_steps; ++k) {
    const double left = k > 0 ? val[k - 1] : std::numeric_limits<double>::infinity();
    const double right = k < grid_steps ? val[k + 1] : std::numeric_limits<double>::infinity();
    if (!(val[k] < left && val[k] <= right)) continue;

    double a = grid[k > 0 ? k - 1 : k];
    double b = grid[k < grid_steps ? k + 1 : k];
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-12 * std::max(1.0, std::abs(a))) {
      if (fc < fd) {
        b = d; d = c; fd = fc;
        c = b - kInvPhi * (b - a);
        fc = f(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + kInvPhi * (b - a);
        fd = f(d);
      }
    }
    double best = 0.5 * (a + b);
    double fbest = f(best);
    if (val[k] < fbest) {
      best = grid[k];
      fbest = val[k];
    }
    if (fbest > kResonanceTol) continue;
    if (!found.empty() && std::abs(found.back() - best) <= 1e-9 * std::max(1.0, std::abs(best))) continue;
    found.push_back(best);
  }
  return found;
}

}  // namespace darboux
