#pragma once

#include <filesystem>
#include <iosfwd>

#include <nlohmann/json.hpp>

#include "darboux/curve.hpp"

namespace darboux {

// Curve document: { "closed": bool, "vertices": [[w,x,y,z], ...], "weights": [m, ...] }.
// Doubles are written in shortest round-trip form.

nlohmann::json to_json(const CurveDocument& doc);

/// Throws SchemaError on a malformed document. Performs no invariant checks.
CurveDocument document_from_json(const nlohmann::json& j);

void save_curve(const CurveDocument& doc, std::ostream& sink);
inline void save_curve(const PolarisedCurve& curve, std::ostream& sink) { save_curve(curve.to_document(), sink); }

/// Parses and validates: SchemaError for malformed documents, InvariantError
/// for bad weights, DegenerateEdgeError for repeated consecutive vertices.
PolarisedCurve load_curve(std::istream& source);

void save_curve_file(const CurveDocument& doc, const std::filesystem::path& path);
PolarisedCurve load_curve_file(const std::filesystem::path& path);
CurveDocument load_document_file(const std::filesystem::path& path);

}  // namespace darboux
