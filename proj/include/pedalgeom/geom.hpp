#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pedalgeom {

/// Relative tolerance used by every "is a point" / "is similar" predicate
/// unless the caller passes its own. Scaled by the relevant polygon diameter.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class ErrorKind {
  InvalidInput,
  Parallel,
  Degenerate,
  VerificationFailed,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

/// Positions and displacements share one representation.
using Point = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }
inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Reduces an angle into [0, 2*pi).
double wrap_two_pi(double angle);

/// A line stored as base point plus unit direction. Never as a slope.
class DirectedLine {
 public:
  /// Normalizes `dir`; throws InvalidInput when it is zero or non-finite.
  DirectedLine(Point base, Vec2 dir);

  /// L(a, b). Throws Degenerate when a == b.
  static DirectedLine through(Point a, Point b);

  Point base() const { return base_; }
  Vec2 dir() const { return dir_; }
  /// Left-hand unit normal.
  Vec2 normal() const { return perp(dir_); }
  Point point_at(double t) const { return base_ + dir_ * t; }
  bool contains(Point p, double abs_tol) const {
    return std::abs(cross(dir_, p - base_)) <= abs_tol;
  }

 private:
  Point base_;
  Vec2 dir_;
};

/// Ordered n-tuple of vertices, n >= 3, with cyclic indexing V_i = V_{i mod n}.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);
  Polygon(std::initializer_list<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  /// Cyclic access; any integer index is valid.
  const Point& operator[](std::ptrdiff_t i) const { return vertices_[wrap(i)]; }
  std::span<const Point> vertices() const { return vertices_; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  /// L(V_i, V_{i+1}).
  DirectedLine side_line(std::ptrdiff_t i) const;

  /// Vertices relabeled as (V_{s(0)}, V_{s(1)}, ...), where s(i) = shift + i
  /// or, reversed, shift - i.
  Polygon relabeled(std::ptrdiff_t shift, bool reversed) const;

  std::size_t wrap(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return static_cast<std::size_t>(((i % n) + n) % n);
  }

 private:
  std::vector<Point> vertices_;
};

enum class Orientation { CCW, CW, Degenerate };

/// Shoelace area, signed: positive for counterclockwise.
double area(const Polygon& p);

/// Sign of area(p), with |area| <= tol * diam^2 reported as Degenerate.
Orientation orientation(const Polygon& p, double tol = kDefaultTol);

/// Largest pairwise vertex distance.
double diameter(std::span<const Point> pts);
inline double diameter(const Polygon& p) { return diameter(p.vertices()); }

Point centroid(std::span<const Point> pts);
inline Point centroid(const Polygon& p) { return centroid(p.vertices()); }

Point foot_of_perpendicular(Point x, const DirectedLine& line);

/// v . (Y - X) for any Y on the line. `v` must be a unit normal of the line;
/// otherwise throws InvalidInput.
double signed_distance(Point x, const DirectedLine& line, Vec2 v, double tol = kDefaultTol);

/// 1/2 * sum of side length times signed distance from X to each side with
/// respect to the outward normal. Equals area(v) for every X. Requires a
/// counterclockwise triangle.
double area_by_signed_distances(const Polygon& v, Point x);

/// Unsigned angle in (0, pi) between V_i -> V_{i-1} and V_i -> V_{i+1}.
/// Throws Degenerate when the triple is collinear.
double vertex_angle(const Polygon& p, std::ptrdiff_t i);

/// True interior angle in (0, 2*pi), taking the polygon's orientation into
/// account, so reflex vertices report values above pi. Equals vertex_angle
/// for convex polygons. Throws Degenerate for collinear triples.
double interior_angle(const Polygon& p, std::ptrdiff_t i);

/// Throws Parallel when |sin| of the angle between the lines is <= tol.
Point line_intersection(const DirectedLine& a, const DirectedLine& b, double tol = 1e-12);

/// Intersection point of segments [a0,a1] and [b0,b1] when they cross at a
/// point interior to both (no shared endpoints, no collinear overlap).
std::optional<Point> proper_segment_intersection(Point a0, Point a1, Point b0, Point b1,
                                                 double tol = kDefaultTol);

/// Orthogonal reflection of p across the line.
Point reflect_across(Point p, const DirectedLine& line);

/// Incenter (a*A + b*B + c*C) / (a + b + c) with a = |BC| etc.
Point incenter(Point a, Point b, Point c);

Point circumcenter(Point a, Point b, Point c);

}  // namespace pedalgeom
