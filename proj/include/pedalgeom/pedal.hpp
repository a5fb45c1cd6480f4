#pragma once

#include <span>
#include <string>
#include <vector>

#include "pedalgeom/geom.hpp"
#include "pedalgeom/similarity.hpp"

namespace pedalgeom {

/// Vertex i is the foot of the perpendicular from X to L(V_i, V_{i+1}).
/// Throws Degenerate when two consecutive vertices coincide within
/// tol * diam(V).
Polygon pedal(const Polygon& v, Point x, double tol = kDefaultTol);

/// Side i of the result passes through V_i perpendicular to L(X, V_i), so
/// pedal(antipedal(V, X), X) == V. Throws Degenerate when X sits on a vertex
/// and Parallel when two consecutive side-lines are parallel (X, V_i, V_{i+1}
/// collinear).
Polygon antipedal(const Polygon& v, Point x, double tol = kDefaultTol);

struct PedalSequence {
  Polygon result;
  /// intermediates[0] is the input; intermediates[k] is the k-th pedal.
  std::vector<Polygon> intermediates;
};

/// Folds pedal over S. A step whose output has two coincident consecutive
/// vertices aborts with Degenerate naming that step.
PedalSequence iterated_pedal(const Polygon& v, std::span<const Point> points,
                             double tol = kDefaultTol);

/// S' such that iterated_pedal(iterated_pedal(V, S).result, S') is similar to
/// V. Each X_k, last first, is expanded into n - 1 repeats, mapped through the
/// similarity fitted between the recovered copy and the original
/// intermediate.
std::vector<Point> reverse_path(const Polygon& v, std::span<const Point> points,
                                double tol = kDefaultTol);

struct PedalStep {
  Point point;
  /// Name of the construction that produced the point.
  std::string provenance;
};

/// A point sequence with per-step provenance. transforms[k] is the
/// accumulated similarity used to carry step k's point from the frame it was
/// constructed in into the frame of the replay.
struct PedalPath {
  std::vector<PedalStep> steps;
  std::vector<Similarity> transforms;
  double verification_distance = 0.0;

  std::vector<Point> points() const;
  void push(Point p, std::string provenance, const Similarity& transform) {
    steps.push_back({p, std::move(provenance)});
    transforms.push_back(transform);
  }
};

}  // namespace pedalgeom
