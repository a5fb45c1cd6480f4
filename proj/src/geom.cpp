#include "pedalgeom/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pedalgeom {
namespace {

// |sin| below this marks a vertex triple as collinear.
constexpr double kCollinearSin = 1e-12;

double collinear_sin(Vec2 e0, Vec2 e1) {
  const double len = norm(e0) * norm(e1);
  if (len == 0.0) return 0.0;
  return std::abs(cross(e0, e1)) / len;
}

}  // namespace

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

DirectedLine::DirectedLine(Point base, Vec2 dir) : base_(base) {
  const double len = norm(dir);
  if (!(len > 0.0) || !std::isfinite(len) || !is_finite(base)) {
    throw GeometryError(ErrorKind::InvalidInput, "line direction must be finite and nonzero");
  }
  dir_ = dir / len;
}

DirectedLine DirectedLine::through(Point a, Point b) {
  if (a == b) {
    throw GeometryError(ErrorKind::Degenerate, "line through two coincident points");
  }
  return DirectedLine(a, b - a);
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw GeometryError(ErrorKind::InvalidInput, "a polygon needs at least 3 vertices");
  }
  for (const auto& p : vertices_) {
    if (!is_finite(p)) {
      throw GeometryError(ErrorKind::InvalidInput, "polygon vertex is not finite");
    }
  }
}

Polygon::Polygon(std::initializer_list<Point> vertices)
    : Polygon(std::vector<Point>(vertices)) {}

DirectedLine Polygon::side_line(std::ptrdiff_t i) const {
  return DirectedLine::through((*this)[i], (*this)[i + 1]);
}

Polygon Polygon::relabeled(std::ptrdiff_t shift, bool reversed) const {
  std::vector<Point> out;
  out.reserve(size());
  const auto n = static_cast<std::ptrdiff_t>(size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out.push_back((*this)[reversed ? shift - i : shift + i]);
  }
  return Polygon(std::move(out));
}

double area(const Polygon& p) {
  double twice = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) twice += cross(p[i], p[i + 1]);
  return 0.5 * twice;
}

Orientation orientation(const Polygon& p, double tol) {
  const double a = area(p);
  const double d = diameter(p);
  if (std::abs(a) <= tol * d * d) return Orientation::Degenerate;
  return a > 0.0 ? Orientation::CCW : Orientation::CW;
}

double diameter(std::span<const Point> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, distance(pts[i], pts[j]));
    }
  }
  return best;
}

Point centroid(std::span<const Point> pts) {
  Point sum;
  for (const auto& p : pts) sum += p;
  return sum / static_cast<double>(pts.size());
}

Point foot_of_perpendicular(Point x, const DirectedLine& line) {
  const Vec2 d = line.dir();
  return line.base() + d * dot(x - line.base(), d);
}

double signed_distance(Point x, const DirectedLine& line, Vec2 v, double tol) {
  if (std::abs(norm(v) - 1.0) > tol || std::abs(dot(v, line.dir())) > tol) {
    throw GeometryError(ErrorKind::InvalidInput, "signed_distance: v is not a unit normal of the line");
  }
  return dot(v, line.base() - x);
}

double area_by_signed_distances(const Polygon& v, Point x) {
  if (v.size() != 3) {
    throw GeometryError(ErrorKind::InvalidInput, "area_by_signed_distances expects a triangle");
  }
  if (orientation(v) != Orientation::CCW) {
    throw GeometryError(ErrorKind::InvalidInput, "area_by_signed_distances expects a counterclockwise triangle");
  }
  double sum = 0.0;
  for (std::ptrdiff_t i = 0; i < 3; ++i) {
    const DirectedLine side = v.side_line(i);
    // Outward normal of a CCW polygon is on the right of each directed side.
    const Vec2 outward = -side.normal();
    sum += distance(v[i], v[i + 1]) * signed_distance(x, side, outward);
  }
  return 0.5 * sum;
}

double vertex_angle(const Polygon& p, std::ptrdiff_t i) {
  const Vec2 a = p[i - 1] - p[i];
  const Vec2 b = p[i + 1] - p[i];
  if (collinear_sin(a, b) <= kCollinearSin) {
    throw GeometryError(ErrorKind::Degenerate, "vertex_angle: collinear vertex triple");
  }
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

double interior_angle(const Polygon& p, std::ptrdiff_t i) {
  const Vec2 e0 = p[i] - p[i - 1];
  const Vec2 e1 = p[i + 1] - p[i];
  if (collinear_sin(e0, e1) <= kCollinearSin) {
    throw GeometryError(ErrorKind::Degenerate, "interior_angle: collinear vertex triple");
  }
  const double turn = std::atan2(cross(e0, e1), dot(e0, e1));
  return area(p) >= 0.0 ? kPi - turn : kPi + turn;
}

Point line_intersection(const DirectedLine& a, const DirectedLine& b, double tol) {
  const double s = cross(a.dir(), b.dir());
  if (std::abs(s) <= tol) {
    throw GeometryError(ErrorKind::Parallel, "line_intersection: lines are parallel");
  }
  const double t = cross(b.base() - a.base(), b.dir()) / s;
  return a.point_at(t);
}

std::optional<Point> proper_segment_intersection(Point a0, Point a1, Point b0, Point b1,
                                                 double tol) {
  const double scale = std::max({distance(a0, a1), distance(b0, b1), 1e-300});
  const double eps = tol * scale * scale;
  const double d1 = cross(a1 - a0, b0 - a0);
  const double d2 = cross(a1 - a0, b1 - a0);
  const double d3 = cross(b1 - b0, a0 - b0);
  const double d4 = cross(b1 - b0, a1 - b0);
  const bool straddle_a = (d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps);
  const bool straddle_b = (d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps);
  if (!straddle_a || !straddle_b) return std::nullopt;
  const double t = d3 / (d3 - d4);
  return a0 + (a1 - a0) * t;
}

Point reflect_across(Point p, const DirectedLine& line) {
  const Point foot = foot_of_perpendicular(p, line);
  return foot * 2.0 - p;
}

Point incenter(Point a, Point b, Point c) {
  const double la = distance(b, c);
  const double lb = distance(c, a);
  const double lc = distance(a, b);
  const double sum = la + lb + lc;
  if (!(sum > 0.0)) {
    throw GeometryError(ErrorKind::Degenerate, "incenter of a point-triangle");
  }
  return (a * la + b * lb + c * lc) / sum;
}

Point circumcenter(Point a, Point b, Point c) {
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (d == 0.0) {
    throw GeometryError(ErrorKind::Degenerate, "circumcenter of collinear points");
  }
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  return a + Vec2{ac.y * ab2 - ab.y * ac2, ab.x * ac2 - ac.x * ab2} / d;
}

}  // namespace pedalgeom
