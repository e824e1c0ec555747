#pragma once

// Point-line duality.  A point p=(a,b) maps to the line y = a*x - b, so two
// dual lines cross at the abscissa equal to the primal slope of the two
// points, and a validated point set yields a simple arrangement (distinct
// slopes, no three concurrent).  Lines are ranked by decreasing slope:
// line rank 1 is the dual of the rightmost point.

#include <algorithm>
#include <vector>

#include "otk/point_set.hpp"

namespace otk {

// For every line, its crossing partners in left-to-right (abscissa) order.
class DualArrangement {
 public:
  explicit DualArrangement(const PointSet& P) : n_(P.size()) {
    partners_.resize(n_);
    // Line of rank r (1-based) is the dual of the point at x-position n-r.
    for (std::size_t r = 1; r <= n_; ++r) {
      const std::size_t p = n_ - r;
      std::vector<std::pair<Rational, std::size_t>> xs;
      xs.reserve(n_ - 1);
      for (std::size_t s = 1; s <= n_; ++s) {
        if (s == r) continue;
        const std::size_t q = n_ - s;
        xs.emplace_back((P[p].y - P[q].y) / (P[p].x - P[q].x), s);
      }
      std::sort(xs.begin(), xs.end());
      for (std::size_t t = 0; t + 1 < xs.size(); ++t)
        if (xs[t].first == xs[t + 1].first)
          fail(errc::collinear_triple,
               "dual arrangement: concurrent crossings (collinear points)");
      auto& row = partners_[r - 1];
      row.reserve(xs.size());
      for (auto& [x, s] : xs) row.push_back(s);
    }
  }

  std::size_t size() const { return n_; }

  // Rank (1-based) of the j-th line crossed by line of rank r, j 1-based.
  std::size_t partner(std::size_t r, std::size_t j) const {
    return partners_[r - 1][j - 1];
  }
  const std::vector<std::size_t>& partners(std::size_t r) const {
    return partners_[r - 1];
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> partners_;
};

// Flag matrix: row r-1, column j-1 holds 1 when the j-th crossing along the
// rank-r line is with a line of larger rank.  Row r therefore sums to n-r.
inline std::vector<std::vector<int>> psi_matrix(const PointSet& P) {
  DualArrangement arr(P);
  std::vector<std::vector<int>> flags(P.size());
  for (std::size_t r = 1; r <= P.size(); ++r) {
    flags[r - 1].reserve(P.size() - 1);
    for (std::size_t s : arr.partners(r)) flags[r - 1].push_back(s > r ? 1 : 0);
  }
  return flags;
}

}  // namespace otk
