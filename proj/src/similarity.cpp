#include "pedalgeom/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pedalgeom {
namespace {

using cd = std::complex<double>;

cd to_c(Point p) { return {p.x, p.y}; }
Point to_p(cd z) { return {z.real(), z.imag()}; }

}  // namespace

Similarity::Similarity(double scale, double rotation, Vec2 translation, bool reflecting)
    : a_(std::polar(scale, rotation)), b_(translation.x, translation.y), reflecting_(reflecting) {
  if (!(scale > 0.0)) {
    throw GeometryError(ErrorKind::InvalidInput, "similarity scale must be positive");
  }
}

Similarity Similarity::from_complex(cd a, cd b, bool reflecting) {
  Similarity s;
  s.a_ = a;
  s.b_ = b;
  s.reflecting_ = reflecting;
  return s;
}

Point Similarity::apply(Point p) const {
  const cd z = reflecting_ ? std::conj(to_c(p)) : to_c(p);
  return to_p(a_ * z + b_);
}

Polygon Similarity::apply(const Polygon& p) const {
  return Polygon(apply(p.vertices()));
}

std::vector<Point> Similarity::apply(std::span<const Point> pts) const {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(apply(p));
  return out;
}

Similarity Similarity::inverse() const {
  // w = a z + b   =>  z = (w - b) / a
  // w = a z* + b  =>  z = conj((w - b) / a) = conj(1/a) w* - conj(b/a)
  if (!reflecting_) return from_complex(1.0 / a_, -b_ / a_, false);
  return from_complex(std::conj(1.0 / a_), -std::conj(b_ / a_), true);
}

Similarity operator*(const Similarity& f, const Similarity& g) {
  // f(g(z)), with g(z) = ag * r(z) + bg and r = conj when g reflects.
  if (!f.reflecting_) {
    return Similarity::from_complex(f.a_ * g.a_, f.a_ * g.b_ + f.b_, g.reflecting_);
  }
  return Similarity::from_complex(f.a_ * std::conj(g.a_), f.a_ * std::conj(g.b_) + f.b_,
                                  !g.reflecting_);
}

SimilarityFit fit_similarity(const Polygon& v, const Polygon& w, Correspondence corr, bool reflecting) {
  const std::size_t n = v.size();
  if (w.size() != n) {
    throw GeometryError(ErrorKind::InvalidInput, "similarity fit needs equal vertex counts");
  }
  std::vector<cd> zs(n);
  std::vector<cd> ws(n);
  cd zbar = 0.0;
  cd wbar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cd z = to_c(v[static_cast<std::ptrdiff_t>(corr.map(static_cast<std::ptrdiff_t>(i), n))]);
    if (reflecting) z = std::conj(z);
    zs[i] = z;
    ws[i] = to_c(w[static_cast<std::ptrdiff_t>(i)]);
    zbar += z;
    wbar += ws[i];
  }
  zbar /= static_cast<double>(n);
  wbar /= static_cast<double>(n);

  cd num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cd dz = zs[i] - zbar;
    num += std::conj(dz) * (ws[i] - wbar);
    den += std::norm(dz);
  }
  // A point-polygon source admits only the constant map; keep a tiny scale so
  // the transform stays invertible and the residual reports the mismatch.
  const cd a = den > 0.0 ? num / den : cd(std::numeric_limits<double>::min(), 0.0);
  const cd b = wbar - a * zbar;

  SimilarityFit fit;
  fit.transform = Similarity::from_complex(a, b, reflecting);
  fit.correspondence = corr;
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::abs(a * zs[i] + b - ws[i]);
    sq += r * r;
    fit.max_residual = std::max(fit.max_residual, r);
  }
  fit.rms_residual = std::sqrt(sq / static_cast<double>(n));
  return fit;
}

SimilarityFit best_similarity(const Polygon& v, const Polygon& w, const MatchOptions& opts) {
  const std::size_t n = v.size();
  if (w.size() != n) {
    throw GeometryError(ErrorKind::InvalidInput, "similarity search needs equal vertex counts");
  }
  const std::ptrdiff_t shifts = opts.allow_cyclic_shift ? static_cast<std::ptrdiff_t>(n) : 1;
  std::optional<SimilarityFit> best;
  for (int rev = 0; rev <= (opts.allow_reversal ? 1 : 0); ++rev) {
    for (std::ptrdiff_t s = 0; s < shifts; ++s) {
      for (int refl = 0; refl <= (opts.allow_reflection ? 1 : 0); ++refl) {
        SimilarityFit f = fit_similarity(v, w, Correspondence{s, rev == 1}, refl == 1);
        if (!best || f.rms_residual < best->rms_residual) best = f;
      }
    }
  }
  return *best;
}

std::optional<SimilarityFit> similarity_between(const Polygon& v, const Polygon& w,
                                                const MatchOptions& opts, double tol) {
  SimilarityFit f = best_similarity(v, w, opts);
  if (f.max_residual <= tol * diameter(w)) return f;
  return std::nullopt;
}

double similarity_distance(const Polygon& v, const Polygon& w, const MatchOptions& opts) {
  const SimilarityFit f = best_similarity(v, w, opts);
  const double d = diameter(w);
  if (d == 0.0) return f.rms_residual == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return f.rms_residual / d;
}

}  // namespace pedalgeom
