#pragma once

// Deterministic generators for test corpora: integer-grid random sets and
// the structured families (cups, caps, convex circles, wheels).  Everything
// returns a validated PointSet; randomness is seeded and self-contained.

#include "otk/point_set.hpp"
#include "otk/rng.hpp"

namespace otk {

// y = x^2 on x = 0..n-1: every x-sorted triple turns left.
inline PointSet make_cup(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x(static_cast<long>(i));
    pts.push_back({x, x * x});
  }
  return validate(std::move(pts));
}

// y = -x^2: every x-sorted triple turns right.
inline PointSet make_cap(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x(static_cast<long>(i));
    pts.push_back({x, -x * x});
  }
  return validate(std::move(pts));
}

// Rational points on the unit circle via the tangent half-angle map,
// alternating hemispheres so the set is convex but neither cup nor cap.
// Distinct |t| gives distinct x = (1-t^2)/(1+t^2).
inline PointSet make_convex(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    Rational t(static_cast<long>(i) + 2, 2 * static_cast<long>(n) + 4);
    if (i % 2 == 1) t = -t;
    const Rational den = 1 + t * t;
    pts.push_back({(1 - t * t) / den, 2 * t / den});
  }
  return validate(std::move(pts));
}

// Parabola points x = 1..n-1 plus one interior point at x = 3/2, slightly
// above the hull's bottom chord (1,1)-(2,4) there (the parabola arc itself
// dips below the chord, i.e. outside the hull); the height is nudged
// deterministically until general position holds.
inline PointSet make_wheel(std::size_t n) {
  if (n < 4) return make_convex(n);
  std::vector<Point> hull;
  for (std::size_t i = 1; i < n; ++i) {
    const Rational x(static_cast<long>(i));
    hull.push_back({x, x * x});
  }
  for (long j = 0; j < 64; ++j) {
    std::vector<Point> pts = hull;
    pts.push_back({Rational(3, 2), Rational(5, 2) + Rational(1, 13 + j)});
    try {
      PointSet P = validate(pts);
      if (interior_points(P).size() == 1) return P;
    } catch (const Error&) {
    }
  }
  fail(errc::invalid_argument, "wheel generator: no interior height worked",
       {n});
}

// Random convex-position set: distinct random magnitudes on the circle
// parametrization, random hemisphere per point.
inline PointSet make_random_convex(std::size_t n, std::uint64_t seed) {
  if (n == 0) fail(errc::invalid_argument, "convex generator: n = 0");
  std::mt19937_64 g(seed);
  std::vector<long> mags;
  while (mags.size() < n) {
    const long a = static_cast<long>(uniform_below(g, 997)) + 1;
    if (std::find(mags.begin(), mags.end(), a) == mags.end())
      mags.push_back(a);
  }
  std::vector<Point> pts;
  for (long a : mags) {
    Rational t(a, 1000);
    if (uniform_below(g, 2) == 1) t = -t;
    const Rational den = 1 + t * t;
    pts.push_back({(1 - t * t) / den, 2 * t / den});
  }
  return validate(std::move(pts));
}

// Random wheel: a random convex hull plus one interior point near the
// centroid, jittered deterministically until general position holds.
inline PointSet make_random_wheel(std::size_t n, std::uint64_t seed) {
  if (n < 4) return make_random_convex(n, seed);
  const PointSet hull = make_random_convex(n - 1, seed);
  Rational cx = 0, cy = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    cx += hull[i].x;
    cy += hull[i].y;
  }
  cx /= static_cast<long>(hull.size());
  cy /= static_cast<long>(hull.size());
  std::mt19937_64 g(derive_seed(seed, 1));
  for (int attempt = 0; attempt < 256; ++attempt) {
    const long jx = static_cast<long>(uniform_below(g, 2001)) - 1000;
    const long jy = static_cast<long>(uniform_below(g, 2001)) - 1000;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < hull.size(); ++i) pts.push_back(hull[i]);
    pts.push_back({cx + Rational(jx, 100000), cy + Rational(jy, 100000)});
    try {
      PointSet P = validate(std::move(pts));
      if (interior_points(P).size() == 1) return P;
    } catch (const Error&) {
    }
  }
  fail(errc::search_budget, "wheel generator: no interior jitter worked",
       {n, seed});
}

// n distinct columns and uniform heights on a square grid, retried until
// the sample is in general position.
inline PointSet make_random_grid(std::size_t n, std::uint64_t seed) {
  if (n == 0) fail(errc::invalid_argument, "grid generator: n = 0");
  std::mt19937_64 g(seed);
  const std::size_t range = std::max<std::size_t>(4 * n, 16);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::size_t> xs;
    while (xs.size() < n) {
      const std::size_t x = uniform_below(g, range);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back({Rational(static_cast<long>(xs[i])),
                     Rational(static_cast<long>(uniform_below(g, range)))});
    try {
      return validate(std::move(pts));
    } catch (const Error&) {
    }
  }
  fail(errc::search_budget, "grid generator: no general-position sample",
       {n, seed});
}

}  // namespace otk
