#pragma once

#include <vector>

#include "pedalgeom/geom.hpp"
#include "pedalgeom/similarity.hpp"

namespace pedalgeom {

/// Relative threshold on inner_diameter / diam(W) below which the inner
/// polygon counts as a single point.
inline constexpr double kPointTol = 1e-8;

/// Relabeling of the target polygon W, plus whether W was mirrored before
/// solving. Mirroring selects the pedal centers whose pedal polygon is
/// oppositely similar to the relabeled W.
struct TargetCorrespondence {
  Correspondence relabel;
  bool mirrored = false;
  friend bool operator==(const TargetCorrespondence&, const TargetCorrespondence&) = default;
};

enum class RootMethod {
  /// Sign change of the trigonometric area factor (triangles).
  AreaFactorRoot,
  /// Local minimum of inner_diameter over a theta scan (n >= 4).
  DiameterScan,
  /// The area factor vanishes for every theta (the reference triangle is
  /// directly similar to the target under this correspondence); one
  /// representative angle, where the outer triangle is largest.
  AreaFactorVanishes,
};

struct ThetaRoot {
  /// Angle in [0, 2*pi), measured in the frame of the (relabeled, possibly
  /// mirrored) target polygon.
  double theta0 = 0.0;
  /// |area factor| at theta0 for AreaFactorRoot; inner_diameter / diam(W)
  /// for DiameterScan.
  double residual = 0.0;
  TargetCorrespondence correspondence;
  RootMethod method = RootMethod::AreaFactorRoot;
};

struct OuterInnerPair {
  double theta = 0.0;
  Polygon outer;
  Polygon inner;
  /// Unit direction of L(O_i, O_{i+1}).
  std::vector<Vec2> side_directions;
};

/// Interior angles of V used to turn successive outer side-lines
/// (see interior_angle).
std::vector<double> polygon_angles(const Polygon& v);

/// Direction of outer side-line i: angle theta - (alpha_1 + ... + alpha_i),
/// with 1-based i, so side-line n is pinned to theta (mod pi).
std::vector<Vec2> outer_side_directions(const Polygon& v, double theta);

/// O(W, V, theta): side-line i passes through W_i with the direction above;
/// O_i is the intersection of side-lines i-1 and i.
Polygon outer_polygon(const Polygon& w, const Polygon& v, double theta);

/// I(W, V, theta): line i passes through W_i perpendicular to outer side i.
Polygon inner_polygon(const Polygon& w, const Polygon& v, double theta);

OuterInnerPair outer_inner(const Polygon& w, const Polygon& v, double theta);

/// area(O) + area(I); constant in theta.
double area_sum(const Polygon& w, const Polygon& v, double theta);

/// Theta-free value of area_sum, summed sector by sector. Uses cos/sin in
/// place of 1/tan so right angles need no special case.
double closed_form_c(const Polygon& w, const Polygon& v);

double inner_diameter(const Polygon& w, const Polygon& v, double theta);

/// Angles in [0, 2*pi) where the inner polygon collapses to a point.
/// Triangles use the root finder of the pedal-center solver with the identity
/// correspondence; n >= 4 scans inner_diameter on 4096 samples and refines
/// each local minimum by golden-section search, keeping those below
/// kPointTol * diam(W). The result may be empty for n >= 4.
std::vector<ThetaRoot> find_degenerate_theta(const Polygon& w, const Polygon& v);

}  // namespace pedalgeom
