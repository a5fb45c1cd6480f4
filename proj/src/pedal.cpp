#include "pedalgeom/pedal.hpp"

#include <cmath>

namespace pedalgeom {
namespace {

void require_distinct_consecutive(const Polygon& p, double tol, const std::string& what) {
  const double scale = diameter(p);
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (distance(p[i], p[i + 1]) <= tol * scale) {
      throw GeometryError(ErrorKind::Degenerate,
                          what + ": vertices " + std::to_string(i) + " and " +
                              std::to_string(p.wrap(i + 1)) + " coincide");
    }
  }
}

}  // namespace

Polygon pedal(const Polygon& v, Point x, double tol) {
  require_distinct_consecutive(v, tol, "pedal");
  std::vector<Point> feet;
  feet.reserve(v.size());
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    feet.push_back(foot_of_perpendicular(x, v.side_line(i)));
  }
  return Polygon(std::move(feet));
}

Polygon antipedal(const Polygon& v, Point x, double tol) {
  const double scale = diameter(v);
  std::vector<DirectedLine> sides;
  sides.reserve(v.size());
  for (const Point& p : v) {
    const Vec2 radial = p - x;
    if (norm(radial) <= tol * scale) {
      throw GeometryError(ErrorKind::Degenerate, "antipedal: point coincides with a vertex");
    }
    sides.emplace_back(p, perp(radial));
  }
  std::vector<Point> out;
  out.reserve(v.size());
  const std::size_t n = sides.size();
  for (std::size_t i = 0; i < n; ++i) {
    const DirectedLine& prev = sides[(i + n - 1) % n];
    try {
      out.push_back(line_intersection(prev, sides[i]));
    } catch (const GeometryError&) {
      throw GeometryError(ErrorKind::Parallel,
                          "antipedal: side-lines " + std::to_string((i + n - 1) % n) + " and " +
                              std::to_string(i) + " are parallel");
    }
  }
  return Polygon(std::move(out));
}

PedalSequence iterated_pedal(const Polygon& v, std::span<const Point> points, double tol) {
  PedalSequence seq{v, {v}};
  seq.intermediates.reserve(points.size() + 1);
  // The fold runs in long double, centered on the current pedal point.
  // Steps where X lies close to a side-line shrink the polygon sharply and
  // amplify rounding in the next step by the inverse of that shrinkage.
  struct Wide {
    long double x, y;
  };
  std::vector<Wide> local;
  for (const Point& p : v) local.push_back({p.x, p.y});
  long double ox = 0.0L, oy = 0.0L;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::string step = "iterated_pedal step " + std::to_string(k + 1);
    require_distinct_consecutive(seq.result, tol, step + " input");
    const long double dx = points[k].x - ox, dy = points[k].y - oy;
    for (Wide& p : local) {
      p.x -= dx;
      p.y -= dy;
    }
    ox = points[k].x;
    oy = points[k].y;
    // Foot from the origin onto L(a, b): perp(b - a) * cross(b, a) / |b - a|^2.
    const std::size_t n = local.size();
    std::vector<Wide> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Wide a = local[i], b = local[(i + 1) % n];
      const long double ex = b.x - a.x, ey = b.y - a.y;
      const long double len2 = ex * ex + ey * ey;
      if (len2 == 0.0L) {
        throw GeometryError(ErrorKind::Degenerate, step + " input: vertices " + std::to_string(i) + " and " +
                                                       std::to_string((i + 1) % n) + " coincide");
      }
      const long double c = (b.x * a.y - b.y * a.x) / len2;
      next[i] = {-ey * c, ex * c};
    }
    local = std::move(next);
    std::vector<Point> placed;
    placed.reserve(n);
    for (const Wide& p : local) placed.push_back({static_cast<double>(p.x + ox), static_cast<double>(p.y + oy)});
    Polygon out(std::move(placed));
    require_distinct_consecutive(out, tol, step + " output");
    seq.intermediates.push_back(out);
    seq.result = std::move(out);
  }
  return seq;
}

std::vector<Point> reverse_path(const Polygon& v, std::span<const Point> points, double tol) {
  const PedalSequence forward = iterated_pedal(v, points, tol);
  const std::size_t repeats = v.size() - 1;

  std::vector<Point> out;
  out.reserve(points.size() * repeats);
  Polygon current = forward.result;
  // Maps the frame of forward.intermediates[k] onto `current`.
  Similarity frame = Similarity::identity();
  for (std::size_t k = points.size(); k-- > 0;) {
    const Point mapped = frame(points[k]);
    const std::vector<Point> block(repeats, mapped);
    current = iterated_pedal(current, block, tol).result;
    out.insert(out.end(), block.begin(), block.end());
    frame = best_similarity(forward.intermediates[k], current).transform;
  }
  return out;
}

std::vector<Point> PedalPath::points() const {
  std::vector<Point> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.point);
  return out;
}

}  // namespace pedalgeom
