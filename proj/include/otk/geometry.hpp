#pragma once

// Planar points with exact rational coordinates and the one primitive
// everything else reduces to: the sign of the cross product
// (b-a) x (c-a), i.e. the orientation of an ordered triple.

#include <compare>

#include "otk/rational.hpp"

namespace otk {

enum class Orientation : int { clockwise = -1, counterclockwise = +1 };

inline Orientation opposite(Orientation o) {
  return o == Orientation::counterclockwise ? Orientation::clockwise
                                            : Orientation::counterclockwise;
}

inline int orientation_value(Orientation o) { return static_cast<int>(o); }

struct Point {
  Rational x, y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Orientation of the ordered triple (a,b,c).  Duplicate points and collinear
// triples are contract violations, never silently absorbed.
inline Orientation orient(const Point& a, const Point& b, const Point& c) {
  if (a == b || a == c || b == c)
    fail(errc::duplicate_point, "orient: duplicate point in triple");
  const Rational d = cross(a, b, c);
  const int s = sign_of(d);
  if (s == 0) fail(errc::collinear_triple, "orient: collinear triple");
  return s > 0 ? Orientation::counterclockwise : Orientation::clockwise;
}

// w above the line through u,v, where the line is read left-to-right
// (x(u) < x(v) required).  "Above" equals a counterclockwise turn.
inline bool is_above(const Point& w, const Point& u, const Point& v) {
  if (!(u.x < v.x))
    fail(errc::bad_line_order, "is_above: line endpoints must be x-ordered");
  return orient(u, v, w) == Orientation::counterclockwise;
}

inline bool is_below(const Point& w, const Point& u, const Point& v) {
  return !is_above(w, u, v);
}

}  // namespace otk
