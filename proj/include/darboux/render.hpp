#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "darboux/curve.hpp"

namespace darboux {

// How quaternions are flattened to the drawing plane.
//  - "xy", "yz", "wx", ...: orthographic onto two coefficient axes.
//  - "drop-w", "drop-x", "drop-y", "drop-z": discard one coefficient and draw
//    the remaining three in isometric view.
//  - "auto": the coordinate plane holding every curve if there is one,
//    otherwise drop-w.
struct Projection {
  enum class Kind { axes, drop } kind = Kind::drop;
  std::array<int, 2> axes{2, 3};  // coefficient indices 0..3 = w, x, y, z
  int dropped = 0;

  std::array<double, 2> apply(const Quaternion& q) const;
};

/// Throws ParameterError for an unknown name.
Projection parse_projection(const std::string& name, const std::vector<CurveDocument>& curves);

/// SVG 1.1 with one polyline per curve (polygon when closed), the first in
/// black and the rest in distinct colors, auto-scaled viewBox. Throws
/// ParameterError when there is nothing to draw.
void write_svg(std::ostream& out, const std::vector<CurveDocument>& curves, const Projection& projection);

}  // namespace darboux
