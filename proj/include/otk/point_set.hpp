#pragma once

// Validated point sets in general position.  A PointSet stores its points
// sorted by strictly increasing x and guarantees no three are collinear;
// every constructor funnels through validate().  On top of that live the
// order-type table (orientation of every sorted triple), convex-hull
// classification, and the two equivalence tests used throughout: equal
// signature (orientations match under the x-order bijection) and equal
// order type (orientations match under *some* bijection).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "otk/geometry.hpp"

namespace otk {

class PointSet {
 public:
  PointSet() = default;

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  // Orientation of the triple at positions i<j<k (0-based, x-order).
  Orientation triple(std::size_t i, std::size_t j, std::size_t k) const {
    return orient(pts_[i], pts_[j], pts_[k]);
  }

  friend PointSet validate(std::vector<Point> raw);

 private:
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {}
  std::vector<Point> pts_;
};

// Sorts by x, rejects duplicate x-coordinates and collinear triples.
// Collinearity is detected by sorting, per pivot, the slopes to all later
// points: equal adjacent slopes expose a collinear triple in O(n^2 log n).
inline PointSet validate(std::vector<Point> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i].x == raw[i + 1].x)
      fail(errc::duplicate_x, "validate: duplicate x-coordinate",
           {i + 1, i + 2});

  const std::size_t n = raw.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    std::vector<std::pair<Rational, std::size_t>> slopes;
    slopes.reserve(n - i - 1);
    for (std::size_t j = i + 1; j < n; ++j)
      slopes.emplace_back((raw[j].y - raw[i].y) / (raw[j].x - raw[i].x), j);
    std::sort(slopes.begin(), slopes.end());
    for (std::size_t t = 0; t + 1 < slopes.size(); ++t)
      if (slopes[t].first == slopes[t + 1].first) {
        std::size_t a = std::min(slopes[t].second, slopes[t + 1].second);
        std::size_t b = std::max(slopes[t].second, slopes[t + 1].second);
        fail(errc::collinear_triple, "validate: collinear triple",
             {i + 1, a + 1, b + 1});
      }
  }
  return PointSet(std::move(raw));
}

// Indices (0-based, ascending) of the points on the convex hull, via
// monotone chain.  General position makes every comparison strict.
inline std::vector<std::size_t> extreme_points(const PointSet& P) {
  const std::size_t n = P.size();
  if (n == 0) fail(errc::invalid_argument, "extreme_points: empty set");
  if (n <= 2) return n == 1 ? std::vector<std::size_t>{0}
                            : std::vector<std::size_t>{0, 1};

  auto build = [&](Orientation keep) {
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i < n; ++i) {
      while (h.size() >= 2 &&
             P.triple(h[h.size() - 2], h[h.size() - 1], i) != keep)
        h.pop_back();
      h.push_back(i);
    }
    return h;
  };
  std::vector<std::size_t> lower = build(Orientation::counterclockwise);
  std::vector<std::size_t> upper = build(Orientation::clockwise);

  std::vector<bool> on(n, false);
  for (std::size_t i : lower) on[i] = true;
  for (std::size_t i : upper) on[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (on[i]) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> interior_points(const PointSet& P) {
  std::vector<bool> ext(P.size(), false);
  for (std::size_t i : extreme_points(P)) ext[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (!ext[i]) out.push_back(i);
  return out;
}

inline bool is_convex_position(const PointSet& P) {
  return extreme_points(P).size() == P.size();
}

// Wheel set: at most one point off the hull.
inline bool is_wheel_set(const PointSet& P) {
  return extreme_points(P).size() + 1 >= P.size();
}

// All sorted triples share one orientation (vacuously true for n <= 2).
inline bool is_cup_or_cap(const PointSet& P) {
  const std::size_t n = P.size();
  if (n <= 2) return true;
  const Orientation first = P.triple(0, 1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (P.triple(i, j, k) != first) return false;
  return true;
}

// Orientation of every sorted triple, packed by combinatorial rank.
class OrderTypeTable {
 public:
  OrderTypeTable() : n_(0) {}
  explicit OrderTypeTable(const PointSet& P) : n_(P.size()) {
    vals_.reserve(n_ * (n_ - 1) * (n_ - 2) / 6 + 1);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k)
          vals_.push_back(
              static_cast<std::int8_t>(orientation_value(P.triple(i, j, k))));
  }
  OrderTypeTable(std::size_t n, std::vector<std::int8_t> vals)
      : n_(n), vals_(std::move(vals)) {}

  std::size_t size() const { return n_; }

  Orientation at(std::size_t i, std::size_t j, std::size_t k) const {
    return vals_[rank(i, j, k)] > 0 ? Orientation::counterclockwise
                                    : Orientation::clockwise;
  }

  friend bool operator==(const OrderTypeTable& a, const OrderTypeTable& b) {
    return a.n_ == b.n_ && a.vals_ == b.vals_;
  }

 private:
  // Rank of {i<j<k} in the lexicographic listing of 3-subsets of [n].
  std::size_t rank(std::size_t i, std::size_t j, std::size_t k) const {
    auto c3 = [](std::size_t m) { return m * (m - 1) * (m - 2) / 6; };
    auto c2 = [](std::size_t m) { return m * (m - 1) / 2; };
    return c3(n_) - c3(n_ - i) + c2(n_ - i - 1) - c2(n_ - j) + (k - j - 1);
  }

  std::size_t n_;
  std::vector<std::int8_t> vals_;
};

inline bool same_signature(const PointSet& P, const PointSet& Q) {
  if (P.size() != Q.size()) return false;
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (P.triple(i, j, k) != Q.triple(i, j, k)) return false;
  return true;
}

namespace detail {

// Per-point order-type invariant: how many ordered pairs (a,b) of other
// points see (p,a,b) counterclockwise.  Preserved by any orientation-
// preserving bijection, so it prunes the search below.
inline std::vector<std::size_t> ccw_pair_counts(const PointSet& P) {
  const std::size_t n = P.size();
  std::vector<std::size_t> c(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || a == p || b == p) continue;
        if (orient(P[p], P[a], P[b]) == Orientation::counterclockwise) ++c[p];
      }
  return c;
}

}  // namespace detail

// Searches for a bijection P -> Q preserving all triple orientations;
// returns the lexicographically first one (as an index map) or nothing.
// Exact and exponential in the worst case, hence the size cap.
inline std::optional<std::vector<std::size_t>> same_order_type(
    const PointSet& P, const PointSet& Q, std::size_t size_cap = 9) {
  if (P.size() != Q.size()) return std::nullopt;
  const std::size_t n = P.size();
  if (n > size_cap)
    fail(errc::size_limit, "same_order_type: set larger than size cap",
         {n, size_cap});
  if (n == 0) return std::vector<std::size_t>{};

  const auto cntP = detail::ccw_pair_counts(P);
  const auto cntQ = detail::ccw_pair_counts(Q);
  std::vector<bool> extP(n, false), extQ(n, false);
  for (std::size_t i : extreme_points(P)) extP[i] = true;
  for (std::size_t i : extreme_points(Q)) extQ[i] = true;

  std::vector<std::size_t> img(n, n);
  std::vector<bool> used(n, false);

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t q = 0; q < n; ++q) {
      if (used[q] || cntP[i] != cntQ[q] || extP[i] != extQ[q]) continue;
      bool ok = true;
      for (std::size_t a = 0; a < i && ok; ++a)
        for (std::size_t b = a + 1; b < i && ok; ++b)
          if (orient(P[a], P[b], P[i]) != orient(Q[img[a]], Q[img[b]], Q[q]))
            ok = false;
      if (!ok) continue;
      img[i] = q;
      used[q] = true;
      if (self(self, i + 1)) return true;
      used[q] = false;
    }
    return false;
  };
  if (rec(rec, 0)) return img;
  return std::nullopt;
}

}  // namespace otk
