#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pedalgeom/geom.hpp"
#include "pedalgeom/pedal.hpp"

namespace pedalgeom {

/// Relative tolerance for side-length, angle and symmetry equalities.
inline constexpr double kClassifyTol = 1e-7;

enum class QuadTag { Square, Rectangle, Kite, IsoscelesTrapezoid, Simple, NonSimple };

std::string_view to_string(QuadTag tag);

struct QuadClass {
  QuadTag tag = QuadTag::Simple;
  /// Symmetry axis (kite: through a diagonal; trapezoid: through two side
  /// midpoints).
  std::optional<DirectedLine> axis;
  /// Intersection of the diagonal lines L(Q0,Q2) and L(Q1,Q3).
  std::optional<Point> diagonal_intersection;
  /// Crossing point of two non-adjacent edges.
  std::optional<Point> self_intersection;
};

/// Most specific tag, checked in the order non_simple, square, rectangle,
/// kite, isosceles_trapezoid, simple. Throws Degenerate on three successive
/// collinear vertices.
QuadClass classify_quad(const Polygon& q, double tol = kClassifyTol);

std::optional<Point> quad_self_intersection(const Polygon& q, double tol = kDefaultTol);
bool is_rectangle(const Polygon& q, double tol = kClassifyTol);
bool is_square(const Polygon& q, double tol = kClassifyTol);
/// Axis through Q_i, Q_{i+2} that mirrors Q_{i+1} onto Q_{i+3}.
std::optional<DirectedLine> kite_axis(const Polygon& q, double tol = kClassifyTol);
/// Perpendicular bisector of a side Q_iQ_{i+1} that mirrors Q_{i+2} onto
/// Q_{i+3}. Holds for crossed trapezoids too.
std::optional<DirectedLine> trapezoid_axis(const Polygon& q, double tol = kClassifyTol);

/// Shorter over longer side of a rectangle.
double rectangle_aspect(const Polygon& rect);

/// (-1,t), (-1,t-2), (1,t-2), (1,t): a square of side 2 placed so that its
/// pedal at the origin is a kite with axis on the y-axis.
Polygon lemma_square(double t);

enum class AspectBranch { Lower, Upper };

struct SquareRectanglePath {
  std::array<Point, 2> points;
  double t = 1.0;
  Polygon square;
};

/// Two pedal points taking lemma_square(t) to a rectangle of aspect r, where
/// r = t(2 - t). Lower branch t = 1 - sqrt(1 - r), upper t = 1 + sqrt(1 - r).
/// Throws InvalidInput unless 0 < r <= 1.
SquareRectanglePath square_to_rectangle_path(double r, AspectBranch branch = AspectBranch::Lower);

/// A polygon whose pedal at `point` reproduces the input of the stage.
struct AntipedalStage {
  Polygon polygon;
  Point point;
  /// simple_quad_to_trapezoid: 0 when L(W1,W3) hosts X, 1 for L(W2,W4).
  int diagonal = 0;
  bool used_fallback = false;
};

/// X = intersection of the diagonals, R = antipedal(K, X).
AntipedalStage kite_to_rectangle(const Polygon& kite, double tol = kClassifyTol);

/// X = intersection of the diagonals (on the symmetry axis), K =
/// antipedal(T, X). Falls back to other points of the axis if that
/// degenerates.
AntipedalStage trapezoid_to_kite(const Polygon& trapezoid, double tol = kClassifyTol);

/// X on a diagonal line such that X->W2 and X->W4 make equal angles with it
/// (closed form: reflect W4 across the diagonal, intersect L(W2, W4') with
/// the diagonal). antipedal(W, X) is an isosceles trapezoid.
AntipedalStage simple_quad_to_trapezoid(const Polygon& quad, double tol = kClassifyTol);

struct SimplifyStage {
  Point self_intersection;
  /// Edge i whose triangle (I, W_i, W_{i+1}) supplied the incenter.
  int edge = 0;
  Point incenter;
  Polygon simple;
};

/// Y = incenter of a non-degenerate (I, W_i, W_{i+1}); pedal(W, Y) is simple.
SimplifyStage nonsimple_to_simple(const Polygon& quad);

/// (0,0), (1,0), (1,1), (0,1).
Polygon canonical_square();

/// S with iterated_pedal(canonical_square(), S) similar to W.
PedalPath quad_path(const Polygon& w);

/// S with iterated_pedal(V, S) similar to W.
PedalPath connect(const Polygon& v, const Polygon& w);

struct ExploreOptions {
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  unsigned restarts = 4;
};

struct ExploreResult {
  std::vector<Point> points;
  double distance = 0.0;
  /// Best-so-far distance after each evaluation of the winning restart.
  std::vector<double> history;
  std::size_t evaluations = 0;
};

/// Seeded annealing search for a point sequence taking V close to a polygon
/// similar to W. Restarts run concurrently and merge by best distance, ties
/// going to the lower restart index.
ExploreResult explore_ngon(const Polygon& v, const Polygon& w, const ExploreOptions& opts = {});

}  // namespace pedalgeom
