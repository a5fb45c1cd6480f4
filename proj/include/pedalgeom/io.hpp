#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pedalgeom/geom.hpp"
#include "pedalgeom/pedal.hpp"
#include "pedalgeom/similarity.hpp"

namespace pedalgeom::io {

using json = nlohmann::json;

/// {"vertices": [[x,y], ...]}. Rejects n < 3, non-numeric or non-finite
/// entries with GeometryError(InvalidInput). Extra keys are ignored.
Polygon polygon_from_json(const json& j);
json polygon_to_json(const Polygon& p);

Polygon read_polygon(const std::filesystem::path& path);

/// "x,y" -> Point.
Point parse_point(std::string_view text);

json point_to_json(Point p);
json similarity_to_json(const Similarity& s);

/// {"steps": [{"point": [x,y], "provenance": "..."}], "verification_distance": d}
json path_to_json(const PedalPath& path);

/// Fixed-precision rendering, nine significant digits.
std::string format_number(double x);

}  // namespace pedalgeom::io
