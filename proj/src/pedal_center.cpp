#include "pedalgeom/pedal_center.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "pedalgeom/pedal.hpp"

namespace pedalgeom {
namespace {

constexpr int kRootGrid = 2048;
constexpr double kVerifyTol = 1e-7;
// Relative amplitude below which the area factor counts as identically zero.
constexpr double kVanishTol = 1e-12;

int sign(double x) { return (x > 0.0) - (x < 0.0); }

double bisect(auto&& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign(fm) == sign(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

// Grid scan then golden-section refinement of the best cell.
double maximize_periodic(auto&& f) {
  const double h = kTwoPi / kRootGrid;
  double best_t = 0.0, best_f = f(0.0);
  for (int k = 1; k < kRootGrid; ++k) {
    const double fk = f(k * h);
    if (fk > best_f) {
      best_f = fk;
      best_t = k * h;
    }
  }
  double lo = best_t - h, hi = best_t + h;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 100; ++it) {
    const double m1 = hi - g * (hi - lo);
    const double m2 = lo + g * (hi - lo);
    if (f(m1) < f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

NormalizedTarget NormalizedTarget::from(const Polygon& w) {
  if (w.size() != 3) {
    throw GeometryError(ErrorKind::InvalidInput, "normalized target needs a triangle");
  }
  const std::complex<double> w0(w[0].x, w[0].y);
  const std::complex<double> w1(w[1].x, w[1].y);
  const std::complex<double> w2(w[2].x, w[2].y);
  if (w1 == w0) {
    throw GeometryError(ErrorKind::Degenerate, "target triangle has coincident vertices");
  }
  const std::complex<double> lin = 1.0 / (w1 - w0);
  const std::complex<double> z = (w2 - w0) * lin;
  if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z))) {
    throw GeometryError(ErrorKind::Degenerate, "target triangle is collinear");
  }
  return {z.real(), z.imag(), Similarity::from_complex(lin, -w0 * lin, false)};
}

std::array<TargetCorrespondence, 12> triangle_correspondences() {
  std::array<TargetCorrespondence, 12> out;
  std::size_t k = 0;
  for (bool mirrored : {false, true}) {
    for (bool reversed : {false, true}) {
      for (std::ptrdiff_t shift = 0; shift < 3; ++shift) {
        out[k++] = TargetCorrespondence{Correspondence{shift, reversed}, mirrored};
      }
    }
  }
  return out;
}

Polygon corresponding_target(const Polygon& w, const TargetCorrespondence& corr) {
  Polygon relabeled = w.relabeled(corr.relabel.shift, corr.relabel.reversed);
  if (!corr.mirrored) return relabeled;
  std::vector<Point> pts(relabeled.begin(), relabeled.end());
  for (auto& p : pts) p.y = -p.y;
  return Polygon(std::move(pts));
}

double script_m(double theta, double angle1, double angle2, double a, double b) {
  return std::sin(angle1) * std::cos(theta - angle1 - angle2) +
         std::sin(angle2) * (a * std::cos(theta) + b * std::sin(theta));
}

double antiderivative_m(double theta, double angle1, double angle2, double a, double b) {
  return std::sin(angle1) * std::sin(theta - angle1 - angle2) +
         std::sin(angle2) * (a * std::sin(theta) - b * std::cos(theta));
}

std::vector<ThetaRoot> find_theta_roots(const Polygon& v, const Polygon& w,
                                        const TargetCorrespondence& corr) {
  if (v.size() != 3 || w.size() != 3) {
    throw GeometryError(ErrorKind::InvalidInput, "find_theta_roots expects two triangles");
  }
  const Polygon target = corresponding_target(w, corr);
  const NormalizedTarget nt = NormalizedTarget::from(target);
  const double a1 = interior_angle(v, 0);
  const double a2 = interior_angle(v, 1);
  auto m = [&](double t) { return script_m(t, a1, a2, nt.a, nt.b); };
  // Angles solved in the normalized frame map back by undoing its rotation.
  const double frame_shift = -nt.normalizer.rotation();

  // script_m(t) = p cos(t) + q sin(t).
  const double p = std::sin(a1) * std::cos(a1 + a2) + std::sin(a2) * nt.a;
  const double q = std::sin(a1) * std::sin(a1 + a2) + std::sin(a2) * nt.b;
  const double size = std::abs(std::sin(a1)) + std::abs(std::sin(a2)) * std::hypot(nt.a, nt.b);
  if (std::hypot(p, q) <= kVanishTol * size) {
    auto outer_area = [&](double t) { return std::abs(area(outer_polygon(target, v, t))); };
    const double best = maximize_periodic(outer_area);
    return {{wrap_two_pi(best), std::hypot(p, q) / size, corr, RootMethod::AreaFactorVanishes}};
  }

  const double h = kTwoPi / kRootGrid;
  std::vector<double> roots;
  auto add_root = [&](double t) { roots.push_back(t); };
  for (int k = 0; k < kRootGrid; ++k) {
    const double lo = k * h;
    const double hi = (k + 1) * h;
    const double flo = m(lo);
    const double fhi = m(hi);
    if (flo == 0.0) {
      add_root(lo);
      continue;
    }
    if (fhi == 0.0) continue;  // picked up as the next interval's left end
    if (sign(flo) != sign(fhi)) {
      add_root(bisect(m, lo, hi));
      continue;
    }
    // Possible tangency or close pair: split once and retest.
    const double mid = 0.5 * (lo + hi);
    const double fmid = m(mid);
    if (fmid == 0.0) {
      add_root(mid);
    } else if (sign(fmid) != sign(flo)) {
      add_root(bisect(m, lo, mid));
      add_root(bisect(m, mid, hi));
    }
  }

  std::vector<ThetaRoot> out;
  out.reserve(roots.size());
  for (double t : roots) {
    out.push_back({wrap_two_pi(t + frame_shift), std::abs(m(t)), corr, RootMethod::AreaFactorRoot});
  }
  return out;
}

PedalCenter pedal_center(const Polygon& v, const Polygon& w, const ThetaRoot& root) {
  const Polygon target = corresponding_target(w, root.correspondence);
  const OuterInnerPair pair = outer_inner(target, v, root.theta0);
  const double collapse = diameter(pair.inner);
  const double scale = diameter(target);
  if (collapse > kPointTol * scale) {
    std::ostringstream msg;
    msg << "pedal_center: inner triangle did not collapse at theta0=" << root.theta0
        << " (inner diameter " << collapse << ", target diameter " << scale
        << ", root residual " << root.residual << ")";
    throw GeometryError(ErrorKind::Degenerate, msg.str());
  }
  // Concurrent outer lines: the center sits at infinity.
  if (diameter(pair.outer) <= kPointTol * scale) {
    throw GeometryError(ErrorKind::Degenerate, "pedal_center: outer triangle collapsed at theta0=" +
                                                   std::to_string(root.theta0));
  }
  const Point x0 = centroid(pair.inner);
  const SimilarityFit to_v = best_similarity(pair.outer, v, MatchOptions{});
  const Point x = to_v.transform(x0);

  const Polygon relabeled = w.relabeled(root.correspondence.relabel.shift,
                                        root.correspondence.relabel.reversed);
  const double verification = similarity_distance(pedal(v, x), relabeled, MatchOptions{});
  if (!(verification < kVerifyTol)) {
    std::ostringstream msg;
    msg << "pedal_center: pedal triangle is not similar to the target (distance "
        << verification << ")";
    throw GeometryError(ErrorKind::VerificationFailed, msg.str());
  }
  return {x, root, verification};
}

std::vector<PedalCenter> all_pedal_centers(const Polygon& v, const Polygon& w, double dedup_tol) {
  const double radius = dedup_tol * diameter(v);
  std::vector<PedalCenter> out;
  for (const TargetCorrespondence& corr : triangle_correspondences()) {
    for (const ThetaRoot& root : find_theta_roots(v, w, corr)) {
      PedalCenter c;
      try {
        c = pedal_center(v, w, root);
      } catch (const GeometryError&) {
        continue;
      }
      const bool seen = std::any_of(out.begin(), out.end(), [&](const PedalCenter& o) {
        return distance(o.point, c.point) <= radius;
      });
      if (!seen) out.push_back(c);
    }
  }
  return out;
}

}  // namespace pedalgeom
