#include "pedalgeom/io.hpp"

#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace pedalgeom::io {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw GeometryError(ErrorKind::InvalidInput, what);
}

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  // std::from_chars for double is unavailable on older libstdc++.
  std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    bad("not a finite number: '" + buf + "'");
  }
  return v;
}

}  // namespace

Polygon polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array()) {
    bad("polygon JSON must be an object with a \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      bad("each vertex must be a [x, y] pair of numbers");
    }
    const Point p{v[0].get<double>(), v[1].get<double>()};
    if (!is_finite(p)) bad("vertex coordinates must be finite");
    pts.push_back(p);
  }
  if (pts.size() < 3) bad("polygon needs at least 3 vertices");
  return Polygon(std::move(pts));
}

json polygon_to_json(const Polygon& p) {
  json verts = json::array();
  for (const Point& v : p) verts.push_back(point_to_json(v));
  return json{{"vertices", std::move(verts)}};
}

Polygon read_polygon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open polygon file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    bad("invalid JSON in " + path.string() + ": " + e.what());
  }
  return polygon_from_json(j);
}

Point parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) bad("point must be written as x,y");
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

json point_to_json(Point p) { return json::array({p.x, p.y}); }

json similarity_to_json(const Similarity& s) {
  return json{{"scale", s.scale()},
              {"rotation", s.rotation()},
              {"translation", point_to_json(s.translation())},
              {"reflecting", s.reflecting()}};
}

json path_to_json(const PedalPath& path) {
  json steps = json::array();
  for (const auto& s : path.steps) {
    steps.push_back(json{{"point", point_to_json(s.point)}, {"provenance", s.provenance}});
  }
  return json{{"steps", std::move(steps)}, {"verification_distance", path.verification_distance}};
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x == 0.0 ? 0.0 : x);
  return buf;
}

}  // namespace pedalgeom::io
