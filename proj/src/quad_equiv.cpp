#include "pedalgeom/quad_equiv.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "pedalgeom/similarity.hpp"

namespace pedalgeom {
namespace {

constexpr double kRecenterRatio = 1e1;
// Class tests while undoing V: the polygons there carry the rounding of
// steps that pass near degenerate shapes.
constexpr double kConnectTol = 1e-3;
constexpr double kPolishGoal = 1e-12;

void require_quad(const Polygon& q, const char* what) {
  if (q.size() != 4) {
    throw GeometryError(ErrorKind::InvalidInput, std::string(what) + " expects a quadrilateral");
  }
}

std::optional<Point> diagonal_intersection(const Polygon& q) {
  if (q[0] == q[2] || q[1] == q[3]) return std::nullopt;
  try {
    return line_intersection(DirectedLine::through(q[0], q[2]), DirectedLine::through(q[1], q[3]));
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

bool near(Point a, Point b, double abs_tol) { return distance(a, b) <= abs_tol; }

// One forward hop of a quad path, recorded during the backward reduction.
struct ChainLink {
  Polygon source;
  Point point;
  std::size_t repeats;
  std::string provenance;
};

}  // namespace

std::string_view to_string(QuadTag tag) {
  switch (tag) {
    case QuadTag::Square: return "square";
    case QuadTag::Rectangle: return "rectangle";
    case QuadTag::Kite: return "kite";
    case QuadTag::IsoscelesTrapezoid: return "isosceles_trapezoid";
    case QuadTag::Simple: return "simple";
    case QuadTag::NonSimple: return "non_simple";
  }
  return "unknown";
}

std::optional<Point> quad_self_intersection(const Polygon& q, double tol) {
  require_quad(q, "quad_self_intersection");
  if (auto p = proper_segment_intersection(q[0], q[1], q[2], q[3], tol)) return p;
  return proper_segment_intersection(q[1], q[2], q[3], q[0], tol);
}

bool is_rectangle(const Polygon& q, double tol) {
  require_quad(q, "is_rectangle");
  for (std::ptrdiff_t i = 0; i < 4; ++i) {
    const Vec2 a = q[i - 1] - q[i];
    const Vec2 b = q[i + 1] - q[i];
    if (std::abs(dot(a, b)) > tol * norm(a) * norm(b)) return false;
  }
  return true;
}

bool is_square(const Polygon& q, double tol) {
  if (!is_rectangle(q, tol)) return false;
  double lo = distance(q[0], q[1]);
  double hi = lo;
  for (std::ptrdiff_t i = 1; i < 4; ++i) {
    const double s = distance(q[i], q[i + 1]);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo <= tol * hi;
}

std::optional<DirectedLine> kite_axis(const Polygon& q, double tol) {
  require_quad(q, "kite_axis");
  const double scale = diameter(q);
  for (std::ptrdiff_t i = 0; i < 2; ++i) {
    if (q[i] == q[i + 2]) continue;
    const DirectedLine axis = DirectedLine::through(q[i], q[i + 2]);
    if (axis.contains(q[i + 1], tol * scale)) continue;
    if (near(reflect_across(q[i + 1], axis), q[i + 3], tol * scale)) return axis;
  }
  return std::nullopt;
}

std::optional<DirectedLine> trapezoid_axis(const Polygon& q, double tol) {
  require_quad(q, "trapezoid_axis");
  const double scale = diameter(q);
  for (std::ptrdiff_t i = 0; i < 2; ++i) {
    const Vec2 side = q[i + 1] - q[i];
    if (norm(side) <= tol * scale) continue;
    const DirectedLine axis((q[i] + q[i + 1]) * 0.5, perp(side));
    if (near(reflect_across(q[i + 2], axis), q[i + 3], tol * scale)) return axis;
  }
  return std::nullopt;
}

QuadClass classify_quad(const Polygon& q, double tol) {
  require_quad(q, "classify_quad");
  for (std::ptrdiff_t i = 0; i < 4; ++i) (void)vertex_angle(q, i);

  QuadClass out;
  out.diagonal_intersection = diagonal_intersection(q);
  if (auto crossing = quad_self_intersection(q)) {
    out.tag = QuadTag::NonSimple;
    out.self_intersection = crossing;
    return out;
  }
  if (is_square(q, tol)) {
    out.tag = QuadTag::Square;
    out.axis = kite_axis(q, tol);
    return out;
  }
  if (is_rectangle(q, tol)) {
    out.tag = QuadTag::Rectangle;
    out.axis = trapezoid_axis(q, tol);
    return out;
  }
  if (auto axis = kite_axis(q, tol)) {
    out.tag = QuadTag::Kite;
    out.axis = axis;
    return out;
  }
  if (auto axis = trapezoid_axis(q, tol)) {
    out.tag = QuadTag::IsoscelesTrapezoid;
    out.axis = axis;
    return out;
  }
  out.tag = QuadTag::Simple;
  return out;
}

double rectangle_aspect(const Polygon& rect) {
  require_quad(rect, "rectangle_aspect");
  const double a = distance(rect[0], rect[1]);
  const double b = distance(rect[1], rect[2]);
  return std::min(a, b) / std::max(a, b);
}

Polygon lemma_square(double t) {
  return Polygon{{-1.0, t}, {-1.0, t - 2.0}, {1.0, t - 2.0}, {1.0, t}};
}

SquareRectanglePath square_to_rectangle_path(double r, AspectBranch branch) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw GeometryError(ErrorKind::InvalidInput, "square_to_rectangle_path: aspect must lie in (0, 1]");
  }
  const double root = std::sqrt(1.0 - r);
  const double t = branch == AspectBranch::Lower ? 1.0 - root : 1.0 + root;
  const Point x2{0.0, 2.0 * (t - 1.0) / (-t * t + 2.0 * t + 1.0)};
  return {{Point{0.0, 0.0}, x2}, t, lemma_square(t)};
}

AntipedalStage kite_to_rectangle(const Polygon& kite, double tol) {
  require_quad(kite, "kite_to_rectangle");
  if (!kite_axis(kite, tol)) {
    throw GeometryError(ErrorKind::InvalidInput, "kite_to_rectangle: input is not a kite");
  }
  const auto x = diagonal_intersection(kite);
  if (!x) throw GeometryError(ErrorKind::Degenerate, "kite_to_rectangle: diagonals are parallel");
  Polygon rect = antipedal(kite, *x);
  if (!is_rectangle(rect, tol)) {
    throw GeometryError(ErrorKind::VerificationFailed, "kite_to_rectangle: antipedal is not a rectangle");
  }
  return {std::move(rect), *x, 0, false};
}

AntipedalStage trapezoid_to_kite(const Polygon& trapezoid, double tol) {
  require_quad(trapezoid, "trapezoid_to_kite");
  const auto axis = trapezoid_axis(trapezoid, tol);
  if (!axis) {
    throw GeometryError(ErrorKind::InvalidInput, "trapezoid_to_kite: input is not an isosceles trapezoid");
  }
  const double scale = diameter(trapezoid);
  std::vector<Point> candidates;
  if (auto x = diagonal_intersection(trapezoid)) candidates.push_back(*x);
  const Point anchor = foot_of_perpendicular(centroid(trapezoid), *axis);
  for (double s : {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0}) {
    candidates.push_back(axis->point_at(dot(anchor - axis->base(), axis->dir()) + s * scale));
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    try {
      Polygon kite = antipedal(trapezoid, candidates[k]);
      if (kite_axis(kite, tol)) return {std::move(kite), candidates[k], 0, k > 0};
    } catch (const GeometryError&) {
    }
  }
  throw GeometryError(ErrorKind::Degenerate, "trapezoid_to_kite: no point on the axis gives a kite");
}

AntipedalStage simple_quad_to_trapezoid(const Polygon& quad, double tol) {
  require_quad(quad, "simple_quad_to_trapezoid");
  const double scale = diameter(quad);
  for (int diag = 0; diag < 2; ++diag) {
    const Point a = quad[diag];
    const Point b = quad[diag + 1];
    const Point c = quad[diag + 2];
    const Point d = quad[diag + 3];
    if (a == c) continue;
    const DirectedLine diagonal = DirectedLine::through(a, c);
    const Point d_mirror = reflect_across(d, diagonal);

    Point x;
    bool fallback = false;
    try {
      if (near(b, d_mirror, tol * scale)) {
        fallback = true;
        x = line_intersection(diagonal, DirectedLine::through(b, d));
      } else {
        x = line_intersection(diagonal, DirectedLine::through(b, d_mirror));
      }
    } catch (const GeometryError&) {
      continue;
    }
    if (near(x, a, kDefaultTol * scale) || near(x, c, kDefaultTol * scale)) continue;
    try {
      Polygon trap = antipedal(quad, x);
      if (trapezoid_axis(trap, tol)) return {std::move(trap), x, diag, fallback};
    } catch (const GeometryError&) {
    }
  }
  throw GeometryError(ErrorKind::Degenerate,
                      "simple_quad_to_trapezoid: neither diagonal yields an isosceles trapezoid");
}

SimplifyStage nonsimple_to_simple(const Polygon& quad) {
  require_quad(quad, "nonsimple_to_simple");
  const double scale = diameter(quad);
  std::optional<Point> crossing = proper_segment_intersection(quad[0], quad[1], quad[2], quad[3]);
  std::array<int, 2> edges{1, 3};
  if (!crossing) {
    crossing = proper_segment_intersection(quad[1], quad[2], quad[3], quad[0]);
    edges = {0, 2};
  }
  if (!crossing) {
    throw GeometryError(ErrorKind::InvalidInput, "nonsimple_to_simple: quadrilateral is simple");
  }
  for (int e : edges) {
    const Point p = quad[e];
    const Point q = quad[e + 1];
    if (std::abs(cross(p - *crossing, q - *crossing)) <= kDefaultTol * scale * scale) continue;
    const Point y = incenter(*crossing, p, q);
    try {
      Polygon simple = pedal(quad, y);
      if (!quad_self_intersection(simple)) {
        for (std::ptrdiff_t i = 0; i < 4; ++i) (void)vertex_angle(simple, i);
        return {*crossing, e, y, std::move(simple)};
      }
    } catch (const GeometryError&) {
    }
  }
  throw GeometryError(ErrorKind::Degenerate,
                      "nonsimple_to_simple: no incenter produced a simple pedal quadrilateral");
}

Polygon canonical_square() {
  return Polygon{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
}

namespace {

// One reduction hop from `current` towards a rectangle; empty once there.
// Without verify, a kite is taken to its diagonal point unchecked: connect
// corrects what the hop misses on later steps.
std::optional<ChainLink> reduction_step(const Polygon& current, int guard, double tol = kClassifyTol,
                                        bool verify = true) {
  if (guard > 8) {
    throw GeometryError(ErrorKind::Degenerate, "quad_path: reduction did not reach a rectangle");
  }
  try {
    (void)classify_quad(current);
  } catch (const GeometryError& e) {
    throw GeometryError(e.kind(), "quad_path stage " + std::to_string(guard) + ": " + e.what());
  }
  if (is_rectangle(current, tol)) return std::nullopt;
  if (kite_axis(current, tol)) {
    if (!verify) {
      if (const auto x = diagonal_intersection(current)) return ChainLink{antipedal(current, *x), *x, 1, "kite-to-rectangle"};
    }
    AntipedalStage s = kite_to_rectangle(current, tol);
    return ChainLink{s.polygon, s.point, 1, "kite-to-rectangle"};
  }
  if (trapezoid_axis(current, tol)) {
    AntipedalStage s = trapezoid_to_kite(current, tol);
    return ChainLink{s.polygon, s.point, 1, "trapezoid-to-kite"};
  }
  if (quad_self_intersection(current)) {
    SimplifyStage s = nonsimple_to_simple(current);
    return ChainLink{s.simple, s.incenter, 3, "nonsimple-incenter"};
  }
  AntipedalStage s = simple_quad_to_trapezoid(current, tol);
  return ChainLink{s.polygon, s.point, 1, "simple-to-trapezoid"};
}

// An n-fold pedal block about X that leaves p centered near the origin, and
// the similarity it applies. The block is a spiral similarity about X,
// p -> X + g (p - X), so X must solve X = -g c / (1 - g) for the centroid c.
// With X far from p, g depends mostly on the direction from X to p: scan
// directions on a few circles for sign changes of the angle mismatch, then
// finish each candidate with Newton's method on the moved centroid.
struct Recentering {
  Point point;
  Similarity map;
};

std::optional<Recentering> recentering(const Polygon& p) {
  using Complex = std::complex<double>;
  const Complex c(centroid(p).x, centroid(p).y);
  const auto to_point = [](Complex z) { return Point{z.real(), z.imag()}; };
  const auto block = [&](Complex x) {
    return iterated_pedal(p, std::vector<Point>(p.size(), to_point(x))).result;
  };
  const auto factor = [&](Complex x) {
    const Point image = block(x)[0];
    return (Complex(image.x, image.y) - x) / (Complex(p[0].x, p[0].y) - x);
  };
  const auto moved_center = [&](Complex x) {
    const Point m = centroid(block(x));
    return Complex(m.x, m.y);
  };
  // NaN where a pedal step degenerates.
  const auto mismatch = [&](double phi, double rho) {
    try {
      const Complex g = factor(c - std::polar(rho, phi));
      return std::remainder(std::arg(c / (1.0 - g)) - phi, 2.0 * std::numbers::pi);
    } catch (const GeometryError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  const auto newton = [&](Complex x) -> std::optional<Complex> {
    std::optional<Complex> best_x;
    double best_offset = 0.5;
    for (int it = 0; it < 30; ++it) {
      const Complex f = moved_center(x);
      const double offset = std::abs(f) / diameter(block(x));
      if (offset < best_offset) {
        best_offset = offset;
        best_x = x;
      } else if (best_x) {
        break;
      }
      if (offset < 1e-9) break;
      const double h = 1e-7 * std::abs(x - c);
      const Complex fx = (moved_center(x + h) - f) / h;
      const Complex fy = (moved_center(x + Complex(0.0, h)) - f) / h;
      const double det = fx.real() * fy.imag() - fx.imag() * fy.real();
      if (det == 0.0 || !std::isfinite(det)) break;
      x -= Complex(f.real() * fy.imag() - f.imag() * fy.real(), fx.real() * f.imag() - fx.imag() * f.real()) / det;
    }
    return best_x;
  };

  std::optional<Recentering> best;
  double best_gain = 0.0;
  constexpr int kGrid = 256;
  const double step = 2.0 * std::numbers::pi / kGrid;
  for (double radius : {1.0, 8.0, 64.0}) {
    const double rho = radius * std::abs(c);
    double prev = mismatch(0.0, rho);
    for (int k = 1; k <= kGrid; ++k) {
      const double phi = k * step;
      const double cur = mismatch(phi, rho);
      if (prev * cur <= 0.0) {
        try {
          if (const std::optional<Complex> x = newton(c - std::polar(rho, phi - 0.5 * step))) {
            // Rank by the smallest polygon inside the block: precision goes where it shrinks.
            const PedalSequence seq = iterated_pedal(p, std::vector<Point>(p.size(), to_point(*x)));
            double gain = diameter(p);
            for (const Polygon& q : seq.intermediates) gain = std::min(gain, diameter(q));
            if (!best || gain > best_gain) {
              const Complex g = factor(*x);
              best = Recentering{to_point(*x), Similarity::from_complex(g, (1.0 - g) * *x, false)};
              best_gain = gain;
            }
          }
        } catch (const GeometryError&) {
        }
      }
      prev = cur;
    }
  }
  return best;
}

// Levenberg-Marquardt on the points of `groups` (each group one shared point)
// so the replay of `points` from v lands on a copy of `target`.
void polish(const Polygon& v, std::vector<Point>& points, const std::vector<std::vector<std::size_t>>& groups,
            const Polygon& target) {
  const auto residual = [&](const std::vector<Point>& pts) {
    const Polygon r = iterated_pedal(v, pts).result;
    const Similarity fit = best_similarity(target, r).transform;
    const double scale = diameter(r);
    Eigen::VectorXd out(2 * r.size());
    for (std::ptrdiff_t i = 0; i < std::ssize(r); ++i) {
      const Vec2 d = (fit(target[i]) - r[i]) / scale;
      out[2 * i] = d.x;
      out[2 * i + 1] = d.y;
    }
    return out;
  };
  const auto shifted = [&](std::vector<Point> pts, const Eigen::VectorXd& delta) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t i : groups[g]) pts[i] += Vec2{delta[2 * g], delta[2 * g + 1]};
    }
    return pts;
  };
  try {
    Eigen::VectorXd r = residual(points);
    double lambda = 1e-3;
    for (int iter = 0; iter < 40 && r.norm() > 0.0 && lambda < 1e12; ++iter) {
      const PedalSequence seq = iterated_pedal(v, points);
      Eigen::MatrixXd jac(r.size(), 2 * groups.size());
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int axis = 0; axis < 2; ++axis) {
          // Early points move the result a great deal: shrink the step until
          // the residual change stays small enough to be linear.
          double h = 1e-7 * diameter(seq.intermediates[groups[g].front()]);
          for (int tries = 0; tries < 8; ++tries) {
            Eigen::VectorXd delta = Eigen::VectorXd::Zero(2 * groups.size());
            delta[2 * g + axis] = h;
            const Eigen::VectorXd change = residual(shifted(points, delta)) - r;
            jac.col(2 * g + axis) = change / h;
            if (change.norm() <= 1e-6) break;
            h *= 1e-6 / change.norm();
          }
        }
      }
      const Eigen::MatrixXd normal = jac.transpose() * jac;
      const Eigen::VectorXd gradient = jac.transpose() * r;
      while (lambda < 1e12) {
        Eigen::MatrixXd damped = normal;
        damped.diagonal() += lambda * normal.diagonal();
        std::optional<std::vector<Point>> trial;
        Eigen::VectorXd r_trial;
        try {
          trial = shifted(points, damped.ldlt().solve(-gradient));
          r_trial = residual(*trial);
        } catch (const GeometryError&) {
          trial.reset();
        }
        if (trial && r_trial.norm() < r.norm()) {
          points = std::move(*trial);
          r = r_trial;
          lambda = std::max(lambda / 10.0, 1e-12);
          break;
        }
        lambda *= 10.0;
      }
    }
  } catch (const GeometryError&) {
  }
}

// The square-to-rectangle hop, relabeled so its output lines up with `rect`
// vertex for vertex.
SquareRectanglePath aligned_lemma(const Polygon& rect) {
  SquareRectanglePath lemma = square_to_rectangle_path(rectangle_aspect(rect));
  std::optional<Polygon> best_square;
  double best_residual = 0.0;
  for (std::ptrdiff_t shift = 0; shift < 4; ++shift) {
    for (bool reversed : {false, true}) {
      Polygon sq = lemma.square.relabeled(shift, reversed);
      const Polygon out = iterated_pedal(sq, lemma.points).result;
      const double r = best_similarity(out, rect).rms_residual / diameter(rect);
      if (!best_square || r < best_residual) {
        best_square = sq;
        best_residual = r;
      }
    }
  }
  lemma.square = *best_square;
  return lemma;
}

}  // namespace

PedalPath quad_path(const Polygon& w) {
  require_quad(w, "quad_path");

  // Reduce W towards a rectangle, remembering each forward hop.
  std::vector<ChainLink> links;
  Polygon current = w;
  for (int guard = 0;; ++guard) {
    std::optional<ChainLink> link = reduction_step(current, guard);
    if (!link) break;
    current = link->source;
    links.push_back(std::move(*link));
  }

  const SquareRectanglePath lemma = aligned_lemma(current);
  const Polygon start = canonical_square();
  PedalPath path;
  Similarity frame = best_similarity(lemma.square, start).transform;
  for (const Point& p : lemma.points) path.push(frame(p), "square-to-rectangle", frame);
  Polygon forward = iterated_pedal(start, path.points()).result;

  for (auto it = links.rbegin(); it != links.rend(); ++it) {
    frame = best_similarity(it->source, forward).transform;
    const Point mapped = frame(it->point);
    const std::vector<Point> block(it->repeats, mapped);
    for (const Point& p : block) path.push(p, it->provenance, frame);
    forward = iterated_pedal(forward, block).result;
  }

  const Polygon replayed = iterated_pedal(start, path.points()).result;
  path.verification_distance = similarity_distance(replayed, w);
  return path;
}

PedalPath connect(const Polygon& v, const Polygon& w) {
  require_quad(v, "connect");
  require_quad(w, "connect");
  const std::size_t n = v.size();

  // Every point is chosen against the polygon that the replay of the path so
  // far reaches: undoing hops amplifies rounding, so the path has to steer
  // its own trajectory. Pedal steps also shrink the polygon; once it is small
  // against its distance from the origin, an n-fold block moves it back there
  // so its coordinates keep their relative precision.
  PedalPath path;
  Polygon current = v;
  // Appends x and returns the similarity a recentering block then applied.
  const auto advance = [&](Point x, const std::string& tag, const Similarity& frame) {
    path.push(x, tag, frame);
    current = iterated_pedal(v, path.points()).result;
    if (norm(centroid(current)) <= kRecenterRatio * diameter(current)) return Similarity::identity();
    const std::optional<Recentering> r = recentering(current);
    if (!r) return Similarity::identity();
    for (std::size_t k = 0; k < n; ++k) path.push(r->point, "recenter", r->map);
    current = iterated_pedal(v, path.points()).result;
    return r->map;
  };

  // Undo V's reduction hop by hop: a block of k equal pedal points is undone
  // by n - k more at the same point, carried along by any recentering.
  const auto undo = [&](Point x, std::size_t repeats, const std::string& tag, Similarity frame) {
    for (std::size_t r = repeats; r < n; ++r) {
      const Similarity moved = advance(x, "reverse-" + tag, frame);
      x = moved(x);
      frame = moved * frame;
    }
  };
  for (int guard = 0;; ++guard) {
    std::optional<ChainLink> link = reduction_step(current, guard, kConnectTol, false);
    if (!link) break;
    undo(link->point, link->repeats, link->provenance, Similarity::identity());
    if (link->provenance == "kite-to-rectangle") break;
  }

  // The square-to-rectangle hop has no closed-loop stage: undo it from fitted frames.
  const SquareRectanglePath lemma = aligned_lemma(current);
  const PedalSequence hop = iterated_pedal(lemma.square, lemma.points);
  for (std::size_t k = lemma.points.size(); k-- > 0;) {
    const Similarity frame = best_similarity(hop.intermediates[k + 1], current).transform;
    undo(frame(lemma.points[k]), 1, "square-to-rectangle", frame);
  }

  // Then follow the square-to-W path, each point placed against the polygon reached so far.
  const PedalPath to_w = quad_path(w);
  const std::vector<Point> w_points = to_w.points();
  const PedalSequence w_forward = iterated_pedal(canonical_square(), w_points);
  for (std::size_t k = 0; k < w_points.size(); ++k) {
    const Similarity frame = best_similarity(w_forward.intermediates[k], current).transform;
    advance(frame(w_points[k]), to_w.steps[k].provenance, frame * to_w.transforms[k]);
  }

  // What rounding is left sits after the last closed-loop choice. Polish
  // the latest points against W, widening the set until it converges.
  // Recentering blocks are similarities whatever their point, so they
  // cannot steer the shape and are left alone.
  double distance_to_w = similarity_distance(current, w);
  for (std::size_t width : {2, 4, 8, 16}) {
    if (distance_to_w <= kPolishGoal) break;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = path.steps.size(); i-- > 0 && groups.size() <= width;) {
      if (path.steps[i].provenance == "recenter") continue;
      if (groups.empty() || path.steps[i].point != path.steps[groups.back().front()].point) groups.emplace_back();
      groups.back().push_back(i);
    }
    if (groups.size() > width) groups.pop_back();
    for (auto& g : groups) std::ranges::reverse(g);
    std::vector<Point> points = path.points();
    polish(v, points, groups, w);
    const double d = similarity_distance(iterated_pedal(v, points).result, w);
    if (d < distance_to_w) {
      for (std::size_t i = 0; i < points.size(); ++i) path.steps[i].point = points[i];
      distance_to_w = d;
    }
  }

  path.verification_distance = distance_to_w;
  return path;
}

}  // namespace pedalgeom
