#pragma once

#include <string>
#include <string_view>

#include "barycoords/geometry.hpp"

namespace barycoords {

/// Parses {"vertices": [[x, y], ...]} and validates the result.
Polygon polygon_from_json(std::string_view text);
Polygon read_polygon_file(const std::string& path);
std::string polygon_to_json(const Polygon& poly);

/// Named polygons: "quad54" (the Gibbs/Wachspress reference quadrilateral),
/// "hex72" (the hexagon (2,1),(2,2),(1,2),(0,1),(0,0),(1,0)) and "unitsquare".
Polygon builtin_polygon(std::string_view name);

}  // namespace barycoords
