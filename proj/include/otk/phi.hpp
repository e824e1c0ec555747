#pragma once

// The wheel predicate.  A wheel set has at most one point off its convex
// hull; its center w is that interior point, or the leftmost point when the
// set is in convex position.  The predicate reads
//   phi(p,q) = -1 if p = w,  +1 if q = w,  orientation of (p,q,w) otherwise,
// which is antisymmetric and determines every triple orientation through the
// sum rule: (p_i,p_j,p_k) with i<j<k turns counterclockwise exactly when
// phi(p_i,p_j) + phi(p_j,p_k) + phi(p_k,p_i) >= 1.

#include "otk/point_set.hpp"
#include "otk/predicate_table.hpp"

namespace otk {

// Index of the wheel center; not_a_wheel_set when >1 interior point.
inline std::size_t wheel_center(const PointSet& P) {
  if (P.empty()) fail(errc::invalid_argument, "wheel_center: empty set");
  const auto inner = interior_points(P);
  if (inner.size() > 1)
    fail(errc::not_a_wheel_set, "wheel set needs at most one interior point",
         {inner.size()});
  return inner.empty() ? 0 : inner.front();
}

inline PredicateTable phi_encode(const PointSet& P) {
  const std::size_t w = wheel_center(P);
  const std::size_t n = P.size();
  PredicateTable T(n, {"-1", "+1"});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      int v;
      if (p == w)
        v = -1;
      else if (q == w)
        v = +1;
      else
        v = orientation_value(orient(P[p], P[q], P[w]));
      T.set_value(p, q, v < 0 ? 0 : 1);
    }
  return T;
}

// Numeric value of a phi entry (+1/-1).
inline int phi_value(const PredicateTable& T, std::size_t p, std::size_t q) {
  return T.label(T.value(p, q)) == "+1" ? +1 : -1;
}

}  // namespace otk
