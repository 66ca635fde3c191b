#include "darboux/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

constexpr const char* kAxisNames = "wxyz";
constexpr double kFlatTol = 1e-12;

double coeff(const Quaternion& q, int idx) {
  switch (idx) {
    case 0: return q.w;
    case 1: return q.x;
    case 2: return q.y;
    default: return q.z;
  }
}

int axis_index(char c) {
  for (int i = 0; i < 4; ++i)
    if (kAxisNames[i] == c) return i;
  return -1;
}

bool flat_along(const std::vector<CurveDocument>& curves, int idx) {
  for (const auto& c : curves)
    for (const auto& q : c.vertices)
      if (std::abs(coeff(q, idx)) > kFlatTol) return false;
  return true;
}

}  // namespace

std::array<double, 2> Projection::apply(const Quaternion& q) const {
  if (kind == Kind::axes) return {coeff(q, axes[0]), coeff(q, axes[1])};
  std::array<double, 3> r{};
  for (int i = 0, k = 0; i < 4; ++i)
    if (i != dropped) r[static_cast<std::size_t>(k++)] = coeff(q, i);
  const double c30 = std::sqrt(3.0) / 2.0;
  return {(r[1] - r[0]) * c30, r[2] - 0.5 * (r[0] + r[1])};
}

Projection parse_projection(const std::string& name, const std::vector<CurveDocument>& curves) {
  Projection p;
  if (name == "auto") {
    std::vector<int> live;
    for (int i = 0; i < 4; ++i)
      if (!flat_along(curves, i)) live.push_back(i);
    if (live.size() <= 2) {
      // Pad with the lowest flat axes so a point or a line still gets two axes.
      for (int i = 0; live.size() < 2 && i < 4; ++i)
        if (std::find(live.begin(), live.end(), i) == live.end()) live.push_back(i);
      std::sort(live.begin(), live.end());
      p.kind = Projection::Kind::axes;
      p.axes = {live[0], live[1]};
    } else {
      p.kind = Projection::Kind::drop;
      p.dropped = live.size() == 3 ? 6 - live[0] - live[1] - live[2] : 0;
    }
    return p;
  }
  if (name.size() == 6 && name.rfind("drop-", 0) == 0 && axis_index(name[5]) >= 0) {
    p.kind = Projection::Kind::drop;
    p.dropped = axis_index(name[5]);
    return p;
  }
  if (name.size() == 2 && axis_index(name[0]) >= 0 && axis_index(name[1]) >= 0 && name[0] != name[1]) {
    p.kind = Projection::Kind::axes;
    p.axes = {axis_index(name[0]), axis_index(name[1])};
    return p;
  }
  throw ParameterError("unknown projection \"" + name + "\" (auto, drop-w|x|y|z, or two of w,x,y,z)");
}

void write_svg(std::ostream& out, const std::vector<CurveDocument>& curves, const Projection& projection) {
  static constexpr const char* kPalette[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#17becf", "#e377c2", "#8c564b", "#bcbd22"};
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);

  std::vector<std::vector<std::array<double, 2>>> paths;
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = hi_x;
  for (const auto& c : curves) {
    auto& path = paths.emplace_back();
    for (const auto& q : c.vertices) {
      auto p = projection.apply(q);
      p[1] = -p[1];  // SVG y points down
      lo_x = std::min(lo_x, p[0]); hi_x = std::max(hi_x, p[0]);
      lo_y = std::min(lo_y, p[1]); hi_y = std::max(hi_y, p[1]);
      path.push_back(p);
    }
  }
  if (!std::isfinite(lo_x)) throw ParameterError("nothing to render");

  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double pad = 0.05 * extent;
  const double size = 800.0;

  const auto old = out.precision(10);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"" << lo_x - pad << ' ' << lo_y - pad << ' ' << (hi_x - lo_x) + 2 * pad << ' '
      << (hi_y - lo_y) + 2 * pad << "\">\n";
  for (std::size_t n = 0; n < paths.size(); ++n) {
    if (paths[n].empty()) continue;
    out << "  <" << (curves[n].closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << kPalette[n % kColors]
        << "\" stroke-width=\"" << (n == 0 ? 2.0 : 1.5) << "\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t k = 0; k < paths[n].size(); ++k)
      out << (k ? " " : "") << paths[n][k][0] << ',' << paths[n][k][1];
    out << "\"/>\n";
  }
  out << "</svg>\n";
  out.precision(old);
}

}  // namespace darboux
