#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "pedalgeom/geom.hpp"

namespace pedalgeom {

/// Plane similarity z -> a*z + b, or z -> a*conj(z) + b when reflecting.
/// scale = |a| > 0, rotation = arg(a).
class Similarity {
 public:
  Similarity() = default;
  Similarity(double scale, double rotation, Vec2 translation, bool reflecting);

  static Similarity identity() { return {}; }
  static Similarity from_complex(std::complex<double> a, std::complex<double> b, bool reflecting);

  double scale() const { return std::abs(a_); }
  double rotation() const { return std::arg(a_); }
  Vec2 translation() const { return {b_.real(), b_.imag()}; }
  bool reflecting() const { return reflecting_; }
  std::complex<double> linear() const { return a_; }
  std::complex<double> offset() const { return b_; }

  Point apply(Point p) const;
  Point operator()(Point p) const { return apply(p); }
  Polygon apply(const Polygon& p) const;
  std::vector<Point> apply(std::span<const Point> pts) const;

  Similarity inverse() const;

  /// (f * g)(p) == f(g(p)).
  friend Similarity operator*(const Similarity& f, const Similarity& g);

 private:
  std::complex<double> a_{1.0, 0.0};
  std::complex<double> b_{0.0, 0.0};
  bool reflecting_ = false;
};

/// Index map i -> shift + i, or shift - i when reversed.
struct Correspondence {
  std::ptrdiff_t shift = 0;
  bool reversed = false;

  std::size_t map(std::ptrdiff_t i, std::size_t n) const {
    const auto nn = static_cast<std::ptrdiff_t>(n);
    const std::ptrdiff_t j = reversed ? shift - i : shift + i;
    return static_cast<std::size_t>(((j % nn) + nn) % nn);
  }
  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

/// Which correspondences and transform kinds a similarity search may use.
struct MatchOptions {
  bool allow_reflection = true;
  bool allow_cyclic_shift = false;
  bool allow_reversal = false;

  static MatchOptions direct_only() { return {false, false, false}; }
  static MatchOptions any_relabeling() { return {true, true, true}; }
};

struct SimilarityFit {
  Similarity transform;
  Correspondence correspondence;
  /// Root-mean-square of |T(V_sigma(i)) - W_i|.
  double rms_residual = 0.0;
  double max_residual = 0.0;
};

/// Closed-form least-squares similarity taking V_sigma(i) onto W_i for one
/// fixed correspondence and transform kind.
SimilarityFit fit_similarity(const Polygon& v, const Polygon& w, Correspondence corr, bool reflecting);

/// Best least-squares fit over every correspondence and transform kind the
/// options enable. Throws InvalidInput when vertex counts differ.
SimilarityFit best_similarity(const Polygon& v, const Polygon& w, const MatchOptions& opts = {});

/// The best fit if its max residual is within tol * diam(W).
std::optional<SimilarityFit> similarity_between(const Polygon& v, const Polygon& w,
                                                const MatchOptions& opts = {},
                                                double tol = kDefaultTol);

/// RMS residual of the best fit divided by diam(W). Zero iff similar.
double similarity_distance(const Polygon& v, const Polygon& w, const MatchOptions& opts = {});

}  // namespace pedalgeom
