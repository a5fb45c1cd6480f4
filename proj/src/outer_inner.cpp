#include "pedalgeom/outer_inner.hpp"

#include <algorithm>
#include <cmath>

#include "pedalgeom/pedal_center.hpp"

namespace pedalgeom {
namespace {

constexpr int kScanSamples = 4096;
constexpr double kInvPhi = 0.6180339887498948482;

void require_same_size(const Polygon& w, const Polygon& v) {
  if (w.size() != v.size()) {
    throw GeometryError(ErrorKind::InvalidInput, "outer/inner construction needs |V| == |W|");
  }
}

Polygon polygon_from_lines(const Polygon& w, const std::vector<Vec2>& dirs) {
  const std::size_t n = dirs.size();
  std::vector<DirectedLine> lines;
  lines.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lines.emplace_back(w[static_cast<std::ptrdiff_t>(i)], dirs[i]);
  }
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(line_intersection(lines[(i + n - 1) % n], lines[i]));
  }
  return Polygon(std::move(out));
}

double golden_minimize(auto&& f, double lo, double hi) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

std::vector<double> polygon_angles(const Polygon& v) {
  std::vector<double> out;
  out.reserve(v.size());
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) out.push_back(interior_angle(v, i));
  return out;
}

std::vector<Vec2> outer_side_directions(const Polygon& v, double theta) {
  const std::vector<double> angles = polygon_angles(v);
  std::vector<Vec2> dirs;
  dirs.reserve(angles.size());
  double phi = theta;
  for (double a : angles) {
    phi -= a;
    dirs.push_back(unit_vector(phi));
  }
  // Interior angles sum to a multiple of pi, so side-line n already lies
  // along theta; pin it exactly.
  dirs.back() = unit_vector(theta);
  return dirs;
}

Polygon outer_polygon(const Polygon& w, const Polygon& v, double theta) {
  require_same_size(w, v);
  return polygon_from_lines(w, outer_side_directions(v, theta));
}

Polygon inner_polygon(const Polygon& w, const Polygon& v, double theta) {
  require_same_size(w, v);
  std::vector<Vec2> dirs = outer_side_directions(v, theta);
  for (auto& d : dirs) d = perp(d);
  return polygon_from_lines(w, dirs);
}

OuterInnerPair outer_inner(const Polygon& w, const Polygon& v, double theta) {
  require_same_size(w, v);
  std::vector<Vec2> dirs = outer_side_directions(v, theta);
  Polygon outer = polygon_from_lines(w, dirs);
  std::vector<Vec2> normals;
  normals.reserve(dirs.size());
  for (const auto& d : dirs) normals.push_back(perp(d));
  Polygon inner = polygon_from_lines(w, normals);
  return {theta, std::move(outer), std::move(inner), std::move(dirs)};
}

double area_sum(const Polygon& w, const Polygon& v, double theta) {
  const OuterInnerPair p = outer_inner(w, v, theta);
  return area(p.outer) + area(p.inner);
}

double closed_form_c(const Polygon& w, const Polygon& v) {
  require_same_size(w, v);
  const std::vector<double> angles = polygon_angles(v);
  const auto n = static_cast<std::ptrdiff_t>(w.size());
  auto angle = [&](std::ptrdiff_t i) { return angles[w.wrap(i)]; };
  // Terms attached to the corner between side-lines j-1 and j.
  auto corner = [&](std::ptrdiff_t j) {
    const Point prev = w[j - 1];
    const Point cur = w[j];
    const double a = angle(j);
    return cross(prev, cur) - dot(prev, cur) * std::cos(a) / std::sin(a);
  };
  double total = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double ai = angle(i);
    const double aj = angle(i + 1);
    const Point p = w[i];
    total += dot(p, p) * std::sin(ai + aj) / (std::sin(ai) * std::sin(aj));
    total += corner(i) + corner(i + 1);
  }
  return 0.5 * total;
}

double inner_diameter(const Polygon& w, const Polygon& v, double theta) {
  return diameter(inner_polygon(w, v, theta));
}

std::vector<ThetaRoot> find_degenerate_theta(const Polygon& w, const Polygon& v) {
  require_same_size(w, v);
  if (w.size() == 3) {
    return find_theta_roots(v, w, TargetCorrespondence{});
  }

  const double scale = diameter(w);
  auto f = [&](double t) { return inner_diameter(w, v, t); };
  const double step = kTwoPi / kScanSamples;
  std::vector<double> samples(kScanSamples);
  for (int k = 0; k < kScanSamples; ++k) samples[static_cast<std::size_t>(k)] = f(k * step);

  std::vector<ThetaRoot> roots;
  for (int k = 0; k < kScanSamples; ++k) {
    const double here = samples[static_cast<std::size_t>(k)];
    const double before = samples[static_cast<std::size_t>((k + kScanSamples - 1) % kScanSamples)];
    const double after = samples[static_cast<std::size_t>((k + 1) % kScanSamples)];
    if (here > before || here > after) continue;
    const double t = golden_minimize(f, (k - 1) * step, (k + 1) * step);
    const double d = f(t);
    if (d >= kPointTol * scale) continue;
    const double theta0 = wrap_two_pi(t);
    const bool duplicate = std::any_of(roots.begin(), roots.end(), [&](const ThetaRoot& r) {
      const double gap = std::abs(r.theta0 - theta0);
      return std::min(gap, kTwoPi - gap) < 2.0 * step;
    });
    if (!duplicate) {
      roots.push_back({theta0, d / scale, TargetCorrespondence{}, RootMethod::DiameterScan});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const ThetaRoot& a, const ThetaRoot& b) { return a.theta0 < b.theta0; });
  return roots;
}

}  // namespace pedalgeom
