#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>

#include "pedalgeom/pedal.hpp"
#include "pedalgeom/quad_equiv.hpp"
#include "pedalgeom/similarity.hpp"

namespace pedalgeom {
namespace {

struct RestartResult {
  std::vector<Point> points;
  double distance = std::numeric_limits<double>::infinity();
  std::vector<double> history;
  std::size_t evaluations = 0;
};

double evaluate(const Polygon& v, const Polygon& w, const std::vector<Point>& s) {
  try {
    return similarity_distance(iterated_pedal(v, s).result, w);
  } catch (const GeometryError&) {
    return std::numeric_limits<double>::infinity();
  }
}

RestartResult run_restart(const Polygon& v, const Polygon& w, std::size_t budget,
                          std::uint64_t seed, unsigned restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), restart};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const std::size_t max_len = 3 * v.size();
  std::vector<Point> state;
  double state_d = evaluate(v, w, state);
  RestartResult best{state, state_d, {}, 0};

  for (std::size_t it = 0; it < budget; ++it) {
    const double temperature = 0.05 * (1.0 - static_cast<double>(it) / static_cast<double>(budget));
    // Proposals live near the polygon they act on, so sample around the
    // current output's bounding circle.
    Polygon at_end = v;
    try {
      at_end = iterated_pedal(v, state).result;
    } catch (const GeometryError&) {
    }
    const Point center = centroid(at_end);
    const double radius = std::max(diameter(at_end), 1e-12);

    std::vector<Point> proposal = state;
    const double move = unit(rng);
    if (proposal.empty() || (move < 0.4 && proposal.size() < max_len)) {
      proposal.push_back(center + Vec2{gauss(rng), gauss(rng)} * radius);
    } else if (move < 0.85) {
      const auto k = static_cast<std::size_t>(unit(rng) * static_cast<double>(proposal.size()));
      const double local = radius * std::max(temperature, 1e-4);
      proposal[std::min(k, proposal.size() - 1)] += Vec2{gauss(rng), gauss(rng)} * local;
    } else {
      proposal.pop_back();
    }

    const double d = evaluate(v, w, proposal);
    ++best.evaluations;
    const bool accept = d < state_d ||
                        (std::isfinite(d) && temperature > 0.0 &&
                         unit(rng) < std::exp(-(d - state_d) / temperature));
    if (accept) {
      state = std::move(proposal);
      state_d = d;
    }
    if (state_d < best.distance) {
      best.distance = state_d;
      best.points = state;
    }
    best.history.push_back(best.distance);
  }
  return best;
}

}  // namespace

ExploreResult explore_ngon(const Polygon& v, const Polygon& w, const ExploreOptions& opts) {
  if (v.size() != w.size()) {
    throw GeometryError(ErrorKind::InvalidInput, "explore_ngon needs |V| == |W|");
  }
  const unsigned restarts = std::max(1u, opts.restarts);
  std::vector<std::future<RestartResult>> jobs;
  jobs.reserve(restarts);
  for (unsigned r = 0; r < restarts; ++r) {
    std::size_t share = opts.budget / restarts + (r < opts.budget % restarts ? 1 : 0);
    jobs.push_back(std::async(std::launch::async, run_restart, std::cref(v), std::cref(w), share,
                              opts.seed, r));
  }

  ExploreResult out;
  out.distance = std::numeric_limits<double>::infinity();
  bool have = false;
  for (auto& job : jobs) {
    RestartResult r = job.get();
    out.evaluations += r.evaluations;
    if (!have || r.distance < out.distance) {
      have = true;
      out.points = std::move(r.points);
      out.distance = r.distance;
      out.history = std::move(r.history);
    }
  }
  return out;
}

}  // namespace pedalgeom
