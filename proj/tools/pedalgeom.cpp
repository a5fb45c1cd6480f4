// pedalgeom: command-line front end for pedal/antipedal constructions, the
// outer/inner polygon families, triangle pedal centers and quadrilateral
// pedal-equivalence paths.
//
// Exit codes: 0 success, 2 input error, 3 geometric degeneracy,
// 4 verification failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pedalgeom/geom.hpp"
#include "pedalgeom/io.hpp"
#include "pedalgeom/outer_inner.hpp"
#include "pedalgeom/pedal.hpp"
#include "pedalgeom/pedal_center.hpp"
#include "pedalgeom/quad_equiv.hpp"
#include "pedalgeom/similarity.hpp"
#include "pedalgeom/svg.hpp"

namespace {

using namespace pedalgeom;
using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerification = 4;

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> points;
  std::string out;
  std::string svg;
  double tol = kDefaultTol;
  double verify_tol = 1e-7;
  double theta = 0.0;
  std::size_t samples = 64;
  std::size_t budget = 1000;
  std::optional<std::uint64_t> seed;
  unsigned restarts = 4;
  bool timing = false;
  std::string construction = "pedal";
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const svg::Canvas::Style kInputStyle{"#1f4e9c", "none", 1.5, false};
const svg::Canvas::Style kGuideStyle{"#9a9a9a", "none", 0.8, true};
const svg::Canvas::Style kOutputStyle{"#c0392b", "none", 1.8, false};
const svg::Canvas::Style kPointStyle{"#222222", "#222222", 1.0, false};
const svg::Canvas::Style kFaintStyle{"#7fa37f", "none", 1.0, false};

std::vector<Point> parsed_points(const Options& o) {
  std::vector<Point> pts;
  for (const auto& s : o.points) pts.push_back(io::parse_point(s));
  return pts;
}

Polygon polygon_arg(const Options& o, std::size_t k) {
  if (o.files.size() <= k) {
    throw GeometryError(ErrorKind::InvalidInput, "missing polygon file argument #" + std::to_string(k + 1));
  }
  return io::read_polygon(o.files[k]);
}

Point single_point(const Options& o) {
  const auto pts = parsed_points(o);
  if (pts.size() != 1) throw GeometryError(ErrorKind::InvalidInput, "exactly one --point is required");
  return pts.front();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw GeometryError(ErrorKind::InvalidInput, "cannot write " + path);
  f << text;
}

json inputs_echo(const Options& o) {
  json in{{"files", o.files}, {"tol", o.tol}};
  if (!o.points.empty()) {
    json pts = json::array();
    for (const auto& p : parsed_points(o)) pts.push_back(io::point_to_json(p));
    in["points"] = pts;
  }
  return in;
}

json correspondence_json(const TargetCorrespondence& c) {
  return json{{"shift", c.relabel.shift}, {"reversed", c.relabel.reversed}, {"mirrored", c.mirrored}};
}

// ---- rendering ---------------------------------------------------------

svg::Canvas draw_pedal(const Polygon& v, Point x, const Polygon& result) {
  svg::Canvas c;
  c.layer("input").polygon(v, kInputStyle);
  c.layer("construction");
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(v.size()); ++i) {
    c.line(v.side_line(i), kGuideStyle);
    c.segment(x, result[i], kGuideStyle);
  }
  c.point(x, kPointStyle, "X");
  c.layer("output").polygon(result, kOutputStyle);
  return c;
}

svg::Canvas draw_antipedal(const Polygon& v, Point x, const Polygon& result) {
  svg::Canvas c;
  c.layer("input").polygon(v, kInputStyle);
  c.layer("construction");
  for (const Point& p : v) c.segment(x, p, kGuideStyle);
  c.point(x, kPointStyle, "X");
  c.layer("output").polygon(result, kOutputStyle);
  return c;
}

svg::Canvas draw_sequence(const PedalSequence& seq, std::span<const Point> pts) {
  svg::Canvas c;
  c.layer("input").polygon(seq.intermediates.front(), kInputStyle);
  c.layer("construction");
  for (std::size_t k = 0; k < pts.size(); ++k) c.point(pts[k], kPointStyle, "X" + std::to_string(k + 1));
  c.layer("intermediates");
  for (std::size_t k = 1; k + 1 < seq.intermediates.size(); ++k) c.polygon(seq.intermediates[k], kFaintStyle);
  c.layer("output").polygon(seq.result, kOutputStyle);
  return c;
}

svg::Canvas draw_outer_inner(const Polygon& w, const OuterInnerPair& pair, bool inner) {
  svg::Canvas c;
  c.layer("target");
  for (const Point& p : w) c.point(p, kPointStyle);
  c.layer("construction");
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Point through = w[static_cast<std::ptrdiff_t>(i)];
    c.line(DirectedLine(through, pair.side_directions[i]), kGuideStyle);
    if (inner) c.line(DirectedLine(through, perp(pair.side_directions[i])), kGuideStyle);
  }
  c.layer("output").polygon(inner ? pair.inner : pair.outer, kOutputStyle);
  return c;
}

svg::Canvas draw_centers(const Polygon& v, const Polygon& w, const std::vector<PedalCenter>& centers) {
  svg::Canvas c;
  c.layer("reference").polygon(v, kInputStyle);
  // Inset: W scaled to a third of V's size, parked beside it.
  const double dv = diameter(v);
  const double dw = diameter(w);
  double max_x = v[0].x;
  double max_y = v[0].y;
  for (const Point& p : v) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const Similarity inset(dv / (3.0 * dw), 0.0, Point{max_x + 0.2 * dv, max_y} - centroid(w) * (dv / (3.0 * dw)), false);
  c.layer("target").polygon(inset.apply(w), kFaintStyle);
  c.layer("centers");
  for (std::size_t k = 0; k < centers.size(); ++k) {
    c.point(centers[k].point, kPointStyle, std::to_string(k + 1));
  }
  return c;
}

svg::Canvas draw_path(const Polygon& start, const PedalPath& path, const Polygon& target) {
  const auto pts = path.points();
  const PedalSequence seq = iterated_pedal(start, pts);
  svg::Canvas c = draw_sequence(seq, pts);
  const SimilarityFit fit = best_similarity(target, seq.result);
  c.layer("target").polygon(fit.transform.apply(target), kGuideStyle);
  return c;
}

// ---- commands ------------------------------------------------------------

json cmd_pedal(const Options& o, std::optional<svg::Canvas>& canvas) {
  const Polygon v = polygon_arg(o, 0);
  const Point x = single_point(o);
  const Point step[] = {x};
  const Polygon result = iterated_pedal(v, step, o.tol).result;
  canvas = draw_pedal(v, x, result);
  return io::polygon_to_json(result);
}

json cmd_antipedal(const Options& o, std::optional<svg::Canvas>& canvas) {
  const Polygon v = polygon_arg(o, 0);
  const Point x = single_point(o);
  const Polygon result = antipedal(v, x, o.tol);
  canvas = draw_antipedal(v, x, result);
  return io::polygon_to_json(result);
}

json cmd_iterate(const Options& o, std::optional<svg::Canvas>& canvas) {
  const Polygon v = polygon_arg(o, 0);
  const auto pts = parsed_points(o);
  if (pts.empty()) throw GeometryError(ErrorKind::InvalidInput, "iterate needs at least one --point");
  const PedalSequence seq = iterated_pedal(v, pts, o.tol);
  json out = io::polygon_to_json(seq.result);
  json inter = json::array();
  for (const auto& p : seq.intermediates) inter.push_back(io::polygon_to_json(p));
  out["intermediates"] = inter;
  out["similarity_distance_to_input"] = similarity_distance(seq.result, v);
  canvas = draw_sequence(seq, pts);
  return out;
}

json cmd_outer_inner(const Options& o, std::optional<svg::Canvas>& canvas, bool inner) {
  const Polygon w = polygon_arg(o, 0);
  const Polygon v = polygon_arg(o, 1);
  const OuterInnerPair pair = outer_inner(w, v, o.theta);
  json out = io::polygon_to_json(inner ? pair.inner : pair.outer);
  out["theta"] = o.theta;
  out["area"] = area(inner ? pair.inner : pair.outer);
  canvas = draw_outer_inner(w, pair, inner);
  return out;
}

json cmd_invariant_scan(const Options& o) {
  const Polygon w = polygon_arg(o, 0);
  const Polygon v = polygon_arg(o, 1);
  if (o.samples == 0) throw GeometryError(ErrorKind::InvalidInput, "--samples must be positive");
  const double c = closed_form_c(w, v);
  double lo = 0.0, hi = 0.0, sum = 0.0, dev = 0.0;
  for (std::size_t k = 0; k < o.samples; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(o.samples);
    const double s = area_sum(w, v, theta);
    if (k == 0 || s < lo) lo = s;
    if (k == 0 || s > hi) hi = s;
    sum += s;
    dev = std::max(dev, std::abs(s - c));
  }
  const double scale = std::abs(c) + diameter(w) * diameter(w);
  return json{{"command", "invariant-scan"},
              {"inputs", inputs_echo(o)},
              {"outputs",
               {{"samples", o.samples},
                {"min", lo},
                {"max", hi},
                {"mean", sum / static_cast<double>(o.samples)},
                {"spread", hi - lo},
                {"closed_form_c", c},
                {"max_deviation", dev},
                {"relative_deviation", dev / scale}}}};
}

json cmd_centers(const Options& o, std::optional<svg::Canvas>& canvas) {
  const Polygon v = polygon_arg(o, 0);
  const Polygon w = polygon_arg(o, 1);
  if (v.size() != 3 || w.size() != 3) {
    throw GeometryError(ErrorKind::InvalidInput, "centers expects two triangles");
  }
  const auto centers = all_pedal_centers(v, w);
  json list = json::array();
  double worst = 0.0;
  for (const auto& c : centers) {
    worst = std::max(worst, c.verification);
    list.push_back(json{{"point", io::point_to_json(c.point)},
                        {"theta0", c.theta_root.theta0},
                        {"residual", c.theta_root.residual},
                        {"correspondence", correspondence_json(c.theta_root.correspondence)},
                        {"verification", c.verification}});
  }
  canvas = draw_centers(v, w, centers);
  if (centers.empty() || worst >= o.verify_tol) {
    throw VerificationFailure("centers: no verified pedal center");
  }
  return json{{"command", "centers"},
              {"inputs", inputs_echo(o)},
              {"outputs",
               {{"centers", list},
                {"count", centers.size()},
                {"count_differs_from_12", centers.size() != 12},
                {"max_verification", worst}}}};
}

json path_report(const char* command, const Options& o, const PedalPath& path) {
  json out = io::path_to_json(path);
  out["command"] = command;
  out["inputs"] = inputs_echo(o);
  out["length"] = path.steps.size();
  if (!(path.verification_distance < o.verify_tol)) {
    std::cout << out.dump(2) << "\n";
    throw VerificationFailure(std::string(command) + ": replay distance " +
                              std::to_string(path.verification_distance) + " exceeds tolerance");
  }
  return out;
}

json cmd_quad_path(const Options& o, std::optional<svg::Canvas>& canvas) {
  const Polygon w = polygon_arg(o, 0);
  const PedalPath path = quad_path(w);
  canvas = draw_path(canonical_square(), path, w);
  return path_report("quad-path", o, path);
}

json cmd_connect(const Options& o, std::optional<svg::Canvas>& canvas) {
  const Polygon v = polygon_arg(o, 0);
  const Polygon w = polygon_arg(o, 1);
  const PedalPath path = connect(v, w);
  canvas = draw_path(v, path, w);
  return path_report("connect", o, path);
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("PEDALGEOM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw GeometryError(ErrorKind::InvalidInput, "PEDALGEOM_SEED is not an unsigned integer");
    }
  }
  return 0;
}

json cmd_explore(const Options& o, std::optional<svg::Canvas>& canvas) {
  const Polygon v = polygon_arg(o, 0);
  const Polygon w = polygon_arg(o, 1);
  const std::uint64_t seed = resolve_seed(o);
  const ExploreResult r = explore_ngon(v, w, ExploreOptions{o.budget, seed, o.restarts});
  PedalPath path;
  for (const Point& p : r.points) path.push(p, "explore", Similarity::identity());
  path.verification_distance = r.distance;
  json out = io::path_to_json(path);
  out["command"] = "explore";
  out["inputs"] = inputs_echo(o);
  out["inputs"]["seed"] = seed;
  out["inputs"]["budget"] = o.budget;
  out["inputs"]["restarts"] = o.restarts;
  out["length"] = path.steps.size();
  out["evaluations"] = r.evaluations;
  canvas = draw_path(v, path, w);
  return out;
}

json dispatch(const std::string& name, const Options& o, std::optional<svg::Canvas>& canvas) {
  if (name == "pedal") return cmd_pedal(o, canvas);
  if (name == "antipedal") return cmd_antipedal(o, canvas);
  if (name == "iterate") return cmd_iterate(o, canvas);
  if (name == "outer") return cmd_outer_inner(o, canvas, false);
  if (name == "inner") return cmd_outer_inner(o, canvas, true);
  if (name == "invariant-scan") return cmd_invariant_scan(o);
  if (name == "centers") return cmd_centers(o, canvas);
  if (name == "quad-path") return cmd_quad_path(o, canvas);
  if (name == "connect") return cmd_connect(o, canvas);
  if (name == "explore") return cmd_explore(o, canvas);
  throw GeometryError(ErrorKind::InvalidInput, "unknown construction '" + name + "'");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return kExitInput;
    case ErrorKind::Parallel:
    case ErrorKind::Degenerate: return kExitDegenerate;
    case ErrorKind::VerificationFailed: return kExitVerification;
  }
  return kExitInput;
}

void add_common(CLI::App* cmd, Options& o, const char* files_help) {
  cmd->add_option("files", o.files, files_help)->required();
  cmd->add_option("--out,-o", o.out, "Write JSON here instead of stdout");
  cmd->add_option("--svg", o.svg, "Also render the construction as SVG");
  cmd->add_option("--tol", o.tol, "Relative tolerance for degeneracy predicates")->capture_default_str();
  cmd->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pedalgeom: pedal polygons, pedal centers and pedal-equivalence paths"};
  app.require_subcommand(1);
  Options o;

  auto* pedal_cmd = app.add_subcommand("pedal", "Pedal polygon of V with respect to a point");
  add_common(pedal_cmd, o, "Polygon JSON file V");
  pedal_cmd->add_option("--point,-p", o.points, "Point as x,y")->required();

  auto* anti_cmd = app.add_subcommand("antipedal", "Antipedal polygon of V with respect to a point");
  add_common(anti_cmd, o, "Polygon JSON file V");
  anti_cmd->add_option("--point,-p", o.points, "Point as x,y")->required();

  auto* iter_cmd = app.add_subcommand("iterate", "Iterated pedal over a point sequence");
  add_common(iter_cmd, o, "Polygon JSON file V");
  iter_cmd->add_option("--point,-p", o.points, "Point as x,y (repeat for a sequence)")->required();

  for (const char* name : {"outer", "inner"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) + " polygon of W with respect to V and theta");
    add_common(cmd, o, "Polygon JSON files W V");
    cmd->add_option("--theta", o.theta, "Angle in radians")->capture_default_str();
  }

  auto* scan_cmd = app.add_subcommand("invariant-scan", "Scan area(outer) + area(inner) over theta");
  add_common(scan_cmd, o, "Polygon JSON files W V");
  scan_cmd->add_option("--samples,-n", o.samples, "Number of theta samples")->capture_default_str();

  auto* centers_cmd = app.add_subcommand("centers", "All pedal centers of triangle V with respect to W");
  add_common(centers_cmd, o, "Triangle JSON files V W");
  centers_cmd->add_option("--verify-tol", o.verify_tol, "Verification threshold")->capture_default_str();

  auto* quad_cmd = app.add_subcommand("quad-path", "Pedal path from the unit square to quadrilateral W");
  add_common(quad_cmd, o, "Quadrilateral JSON file W");
  quad_cmd->add_option("--verify-tol", o.verify_tol, "Verification threshold")->capture_default_str();

  auto* connect_cmd = app.add_subcommand("connect", "Pedal path from quadrilateral V to W");
  add_common(connect_cmd, o, "Quadrilateral JSON files V W");
  connect_cmd->add_option("--verify-tol", o.verify_tol, "Verification threshold")->capture_default_str();

  auto* explore_cmd = app.add_subcommand("explore", "Randomized search for a pedal path between n-gons");
  add_common(explore_cmd, o, "Polygon JSON files V W");
  explore_cmd->add_option("--budget", o.budget, "Number of evaluations")->capture_default_str();
  explore_cmd->add_option("--seed", o.seed, "Seed (falls back to PEDALGEOM_SEED, then 0)");
  explore_cmd->add_option("--restarts", o.restarts, "Independent restarts")->capture_default_str();

  auto* render_cmd = app.add_subcommand("render", "Render a construction as SVG only");
  add_common(render_cmd, o, "Input polygon files, as for the construction");
  render_cmd->add_option("--construction,-c", o.construction, "Construction to render")
      ->check(CLI::IsMember({"pedal", "antipedal", "iterate", "outer", "inner", "centers", "quad-path",
                             "connect", "explore"}))
      ->capture_default_str();
  render_cmd->add_option("--point,-p", o.points, "Point as x,y");
  render_cmd->add_option("--theta", o.theta, "Angle in radians");
  render_cmd->add_option("--budget", o.budget, "Number of evaluations (explore)");
  render_cmd->add_option("--seed", o.seed, "Seed (explore)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    const auto started = std::chrono::steady_clock::now();
    std::optional<svg::Canvas> canvas;
    if (name == "render") {
      o.verify_tol = std::numeric_limits<double>::infinity();
      (void)dispatch(o.construction, o, canvas);
      if (!canvas) throw GeometryError(ErrorKind::InvalidInput, "construction has no drawing");
      write_text(o.svg.empty() ? o.out : o.svg, canvas->render());
      return 0;
    }
    json report = dispatch(name, o, canvas);
    if (o.timing) {
      report["timing_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - started)
                                .count();
    }
    if (!o.svg.empty() && canvas) write_text(o.svg, canvas->render());
    write_text(o.out, report.dump(2) + "\n");
    return 0;
  } catch (const GeometryError& e) {
    std::cerr << "pedalgeom " << name << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const VerificationFailure& e) {
    std::cerr << "pedalgeom " << name << ": " << e.what() << "\n";
    return kExitVerification;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "pedalgeom " << name << ": " << e.what() << "\n";
    return kExitInput;
  }
}
