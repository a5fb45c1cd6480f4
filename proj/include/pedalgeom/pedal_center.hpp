#pragma once

#include <array>
#include <vector>

#include "pedalgeom/geom.hpp"
#include "pedalgeom/outer_inner.hpp"
#include "pedalgeom/similarity.hpp"

namespace pedalgeom {

/// Direct similarity taking W to W_1 = (0,0), W_2 = (1,0), W_3 = (a,b).
struct NormalizedTarget {
  double a = 0.0;
  double b = 0.0;
  Similarity normalizer;

  /// Throws Degenerate when W is not a proper triangle (b == 0).
  static NormalizedTarget from(const Polygon& w);
};

struct PedalCenter {
  Point point;
  ThetaRoot theta_root;
  /// similarity_distance(pedal(V, point), relabeled W), reflections allowed.
  double verification = 0.0;
};

/// The six vertex relabelings of a triangle (three shifts, both directions),
/// each solved with W as given and mirrored: twelve in all.
std::array<TargetCorrespondence, 12> triangle_correspondences();

/// The target polygon a correspondence refers to: W relabeled, then
/// reflected across the x-axis if mirrored.
Polygon corresponding_target(const Polygon& w, const TargetCorrespondence& corr);

/// Area factor of the inner triangle for a normalized target:
///   sin(A1) cos(theta - A1 - A2) + sin(A2) (a cos(theta) + b sin(theta)).
/// Inner area is proportional to its square, so its roots are exactly the
/// angles at which the inner triangle collapses.
double script_m(double theta, double angle1, double angle2, double a, double b);

/// Antiderivative of script_m in theta:
///   sin(A1) sin(theta - A1 - A2) + sin(A2) (a sin(theta) - b cos(theta)).
double antiderivative_m(double theta, double angle1, double angle2, double a, double b);

/// Roots of script_m in [0, 2*pi) for one correspondence: sign changes on a
/// 2048-point grid refined by bisection. Returned angles are in the frame of
/// corresponding_target(W, corr), so outer_polygon(that target, V, theta0)
/// is the degenerate configuration. When script_m vanishes identically a
/// single AreaFactorVanishes root is returned instead.
std::vector<ThetaRoot> find_theta_roots(const Polygon& v, const Polygon& w,
                                        const TargetCorrespondence& corr);

/// Builds the pedal center for one root. The inner triangle at theta0 is a
/// point X0 whose pedal triangle in the outer triangle is the target; X0 is
/// carried into V's frame by the similarity taking the outer triangle onto
/// V. Throws Degenerate if the inner triangle fails to collapse or the outer
/// one collapses (center at infinity), and
/// VerificationFailed if the pedal check exceeds 1e-7.
PedalCenter pedal_center(const Polygon& v, const Polygon& w, const ThetaRoot& root);

/// Every pedal center over all twelve correspondences, deduplicated at
/// dedup_tol * diam(V).
std::vector<PedalCenter> all_pedal_centers(const Polygon& v, const Polygon& w,
                                           double dedup_tol = 1e-7);

}  // namespace pedalgeom
