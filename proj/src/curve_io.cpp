#include "darboux/curve_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "darboux/errors.hpp"

namespace darboux {

using nlohmann::json;

json to_json(const CurveDocument& doc) {
  json verts = json::array();
  for (const auto& v : doc.vertices) verts.push_back({v.w, v.x, v.y, v.z});
  return json{{"closed", doc.closed}, {"vertices", std::move(verts)}, {"weights", doc.weights}};
}

CurveDocument document_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("curve document must be a JSON object");
  for (const char* key : {"closed", "vertices", "weights"}) {
    if (!j.contains(key)) throw SchemaError(std::string("curve document is missing \"") + key + "\"");
  }
  if (!j["closed"].is_boolean()) throw SchemaError("\"closed\" must be a boolean");
  if (!j["vertices"].is_array()) throw SchemaError("\"vertices\" must be an array");
  if (!j["weights"].is_array()) throw SchemaError("\"weights\" must be an array");

  CurveDocument doc;
  doc.closed = j["closed"].get<bool>();
  std::size_t idx = 0;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 4)
      throw SchemaError("vertex " + std::to_string(idx) + " must be an array of 4 numbers");
    for (const auto& c : v)
      if (!c.is_number()) throw SchemaError("vertex " + std::to_string(idx) + " has a non-numeric coordinate");
    doc.vertices.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>());
    ++idx;
  }
  idx = 0;
  for (const auto& m : j["weights"]) {
    if (!m.is_number()) throw SchemaError("weight " + std::to_string(idx) + " must be a number");
    doc.weights.push_back(m.get<double>());
    ++idx;
  }
  return doc;
}

void save_curve(const CurveDocument& doc, std::ostream& sink) {
  sink << to_json(doc).dump(1) << '\n';
  if (!sink) throw IoError("failed to write curve document");
}

namespace {
CurveDocument parse_document(std::istream& source) {
  json j;
  try {
    j = json::parse(source);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("curve document is not valid JSON: ") + e.what());
  }
  return document_from_json(j);
}
}  // namespace

PolarisedCurve load_curve(std::istream& source) { return PolarisedCurve::from_document(parse_document(source)); }

void save_curve_file(const CurveDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  save_curve(doc, out);
}

CurveDocument load_document_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_document(in);
}

PolarisedCurve load_curve_file(const std::filesystem::path& path) {
  return PolarisedCurve::from_document(load_document_file(path));
}

}  // namespace darboux
