#include "barycoords/polygon_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "barycoords/systems.hpp"

namespace barycoords {

Polygon polygon_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("polygon JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorCode::ParseError, "polygon JSON needs a \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw Error(ErrorCode::ParseError, "each vertex must be a [x, y] pair of numbers");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return Polygon::validate(std::move(pts));
}

Polygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open polygon file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return polygon_from_json(buf.str());
}

std::string polygon_to_json(const Polygon& poly) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Point& p : poly.vertices()) verts.push_back({p.x, p.y});
  return nlohmann::json{{"vertices", verts}}.dump();
}

Polygon builtin_polygon(std::string_view name) {
  if (name == "quad54") return reference_quadrilateral();
  if (name == "hex72") {
    return Polygon::validate({{2, 1}, {2, 2}, {1, 2}, {0, 1}, {0, 0}, {1, 0}});
  }
  if (name == "unitsquare") {
    return Polygon::validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  }
  throw Error(ErrorCode::ParseError, "unknown builtin polygon '" + std::string(name) + "'");
}

}  // namespace barycoords
