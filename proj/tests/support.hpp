#pragma once

// Seeded generators and small oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pedalgeom/geom.hpp"
#include "pedalgeom/quad_equiv.hpp"
#include "pedalgeom/similarity.hpp"

namespace pedalgeom::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }
  Point point(double half_width = 1.0) { return {uniform(-half_width, half_width), uniform(-half_width, half_width)}; }

 private:
  std::mt19937_64 gen_;
};

/// Smallest unsigned vertex angle; 0 if some triple is collinear.
inline double min_vertex_angle(const Polygon& p) {
  double best = kPi;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(p.size()); ++i) {
    const Vec2 a = p[i - 1] - p[i];
    const Vec2 b = p[i + 1] - p[i];
    best = std::min(best, std::abs(std::atan2(cross(a, b), dot(a, b))));
  }
  return best;
}

inline double min_side(const Polygon& p) {
  double best = diameter(p);
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(p.size()); ++i) {
    best = std::min(best, distance(p[i], p[i + 1]));
  }
  return best;
}

/// Triangle with every angle at least `min_angle`, random orientation.
inline Polygon random_triangle(Rng& rng, double min_angle = 0.2) {
  for (;;) {
    Polygon t{rng.point(), rng.point(), rng.point()};
    if (min_vertex_angle(t) >= min_angle && min_side(t) > 0.1) return t;
  }
}

/// Simple star-shaped n-gon (vertices at sorted random angles around the
/// origin), counterclockwise unless `allow_cw` flips it at random. Convex
/// when `convex` is set.
inline Polygon random_ngon(Rng& rng, int n, bool convex = false, bool allow_cw = true) {
  for (;;) {
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(rng.uniform(0.0, kTwoPi));
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    for (double a : angles) {
      const double r = convex ? 1.0 : rng.uniform(0.4, 1.0);
      pts.push_back(unit_vector(a) * r);
    }
    if (allow_cw && rng.coin()) std::reverse(pts.begin(), pts.end());
    Polygon p(std::move(pts));
    if (min_vertex_angle(p) < 0.15 || min_side(p) < 0.1) continue;
    if (convex) {
      bool ok = true;
      const double s = area(p) > 0 ? 1.0 : -1.0;
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (s * cross(p[i + 1] - p[i], p[i + 2] - p[i + 1]) <= 0) ok = false;
      }
      if (!ok) continue;
    }
    return p;
  }
}

inline Similarity random_similarity(Rng& rng, bool allow_reflection = true) {
  return Similarity(rng.uniform(0.3, 3.0), rng.uniform(-kPi, kPi), rng.point(5.0),
                    allow_reflection && rng.coin());
}

/// Quadrilateral with the given most-specific tag, placed by a random
/// similarity.
inline Polygon random_quad(Rng& rng, QuadTag tag) {
  const Similarity place = random_similarity(rng);
  auto relabel = [&](const Polygon& q) { return place.apply(q.relabeled(rng.integer(0, 3), rng.coin())); };
  switch (tag) {
    case QuadTag::Square:
      return relabel(Polygon{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    case QuadTag::Rectangle: {
      double h = rng.uniform(0.15, 0.9);
      return relabel(Polygon{{0, 0}, {1, 0}, {1, h}, {0, h}});
    }
    case QuadTag::Kite: {
      double p = rng.coin() ? rng.uniform(0.15, 0.4) : rng.uniform(0.6, 0.85);
      double q = rng.uniform(0.2, 0.8);
      return relabel(Polygon{{0, 0}, {p, -q}, {1, 0}, {p, q}});
    }
    case QuadTag::IsoscelesTrapezoid: {
      double a = 1.0;
      double b = rng.coin() ? rng.uniform(0.2, 0.8) : rng.uniform(1.2, 1.8);
      double h = rng.uniform(0.3, 1.2);
      return relabel(Polygon{{-a, 0}, {a, 0}, {b, h}, {-b, h}});
    }
    case QuadTag::Simple:
      for (;;) {
        Polygon q = random_ngon(rng, 4);
        if (classify_quad(q).tag == QuadTag::Simple && min_vertex_angle(q) > 0.25) return place.apply(q);
      }
    case QuadTag::NonSimple:
      for (;;) {
        Polygon c = random_ngon(rng, 4, true);
        Polygon q{c[0], c[2], c[1], c[3]};
        if (min_vertex_angle(q) > 0.15 && classify_quad(q).tag == QuadTag::NonSimple) return place.apply(q);
      }
  }
  return canonical_square();
}

inline constexpr QuadTag kAllTags[] = {QuadTag::Square, QuadTag::Rectangle, QuadTag::Kite,
                                       QuadTag::IsoscelesTrapezoid, QuadTag::Simple, QuadTag::NonSimple};

/// Vertexwise max distance.
inline double max_vertex_gap(const Polygon& a, const Polygon& b) {
  double m = 0.0;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(a.size()); ++i) m = std::max(m, distance(a[i], b[i]));
  return m;
}

/// Independent simplicity oracle: no two non-adjacent edges meet.
inline bool is_simple_quad(const Polygon& q) {
  auto crosses = [](Point a, Point b, Point c, Point d) {
    const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    return d1 * d2 < 0 && d3 * d4 < 0;
  };
  return !crosses(q[0], q[1], q[2], q[3]) && !crosses(q[1], q[2], q[3], q[0]);
}

/// Points P with |PA| / |PB| = k (k != 1): center and radius.
struct Circle {
  Point center;
  double radius;
};

inline Circle apollonius(Point a, Point b, double k) {
  const double k2 = k * k;
  return {(a - b * k2) / (1.0 - k2), k * distance(a, b) / std::abs(1.0 - k2)};
}

inline std::vector<Point> circle_intersections(const Circle& c1, const Circle& c2) {
  const double d = distance(c1.center, c2.center);
  const double a = (c1.radius * c1.radius - c2.radius * c2.radius + d * d) / (2.0 * d);
  const double h2 = c1.radius * c1.radius - a * a;
  if (h2 < 0) return {};
  const Vec2 u = (c2.center - c1.center) / d;
  const Point mid = c1.center + u * a;
  const double h = std::sqrt(h2);
  return {mid + perp(u) * h, mid - perp(u) * h};
}

/// Both isodynamic points: PA : PB : PC = 1/a : 1/b : 1/c, i.e. the common
/// points of two Apollonius circles.
inline std::vector<Point> isodynamic_points(const Polygon& t) {
  const Point A = t[0], B = t[1], C = t[2];
  const double a = distance(B, C), b = distance(C, A), c = distance(A, B);
  return circle_intersections(apollonius(A, B, b / a), apollonius(A, C, c / a));
}

}  // namespace pedalgeom::testing
