#pragma once

// Ramsey-type constructions.  All of them are exact: a candidate scale is
// computed from the input geometry, the construction is materialized, and
// every required property is re-verified with rational predicates; on
// failure the scale is halved (and, for collinearity between a copy-pair
// line and a third point, a deterministic schedule of per-copy vertical
// micro-offsets is advanced) until the checks pass.  Nothing is trusted
// from the derivation, only from the re-check.
//
// Budgets: max_points caps the points materialized cumulatively by one
// top-level call (intermediate fold results count); max_depth caps the
// recursion depth of ramsey_build.  The amplifier pre-computes its sizes in
// big integers and refuses before building anything.

#include <vector>

#include "otk/point_io.hpp"
#include "otk/split.hpp"

namespace otk {

struct BuildBudget {
  std::size_t max_points = 100000;
  std::size_t max_depth = 6;
};

namespace detail {

class BudgetTracker {
 public:
  explicit BudgetTracker(const BuildBudget& b) : budget_(b) {}
  void charge(std::size_t pts, const char* what) {
    built_ += pts;
    if (built_ > budget_.max_points)
      fail(errc::budget_exceeded,
           std::string("budget exceeded while building ") + what + ": " +
               std::to_string(built_) + " cumulative points > " +
               std::to_string(budget_.max_points));
  }
  const BuildBudget& budget() const { return budget_; }
  std::size_t built() const { return built_; }

 private:
  BuildBudget budget_;
  std::size_t built_ = 0;
};

// Smallest vertical distance from a point of A to a line spanned by two
// other points of A; 1 when there are no triples.
inline Rational min_vertical_clearance(const PointSet& A) {
  Rational best = 1;
  bool found = false;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      for (std::size_t w = 0; w < A.size(); ++w) {
        if (w == i || w == j) continue;
        Rational d = cross(A[i], A[j], A[w]) / (A[j].x - A[i].x);
        if (d < 0) d = -d;
        if (!found || d < best) best = d, found = true;
      }
  return best;
}

inline Rational min_x_gap(const PointSet& A) {
  Rational best = 1;
  for (std::size_t i = 0; i + 1 < A.size(); ++i) {
    Rational g = A[i + 1].x - A[i].x;
    if (i == 0 || g < best) best = g;
  }
  return best;
}

}  // namespace detail

// product() output plus the box layout it was verified against.
struct ProductDetail {
  PointSet set;
  std::vector<Point> centers;  // one per copy, = the points of A
  Rational half;               // box half-extent actually used
};

// Places a shrunken copy of B inside an axis-aligned box around every point
// of A.  Verified properties: the boxes are x-disjoint in A's order, every
// copy has B's signature, and for any two points in distinct copies the
// line through them leaves every third box entirely on the side prescribed
// by the orientation of the three box centers.  That last check makes every
// transversal of distinct copies inherit A's signature.
inline ProductDetail product_detailed(const PointSet& A, const PointSet& B,
                                      detail::BudgetTracker& tracker) {
  if (A.empty() || B.empty())
    fail(errc::invalid_argument, "product: empty factor");
  const std::size_t m = A.size(), nb = B.size();
  tracker.charge(m * nb, "product");

  Rational h = detail::min_x_gap(A);
  if (detail::min_vertical_clearance(A) < h)
    h = detail::min_vertical_clearance(A);
  if (h > 1) h = 1;
  h /= 4;

  // B normalized around its bounding-box center, spans scaled to h/2.
  Rational bx_lo = B[0].x, bx_hi = B[0].x, by_lo = B[0].y, by_hi = B[0].y;
  for (const Point& b : B) {
    if (b.x < bx_lo) bx_lo = b.x;
    if (b.x > bx_hi) bx_hi = b.x;
    if (b.y < by_lo) by_lo = b.y;
    if (b.y > by_hi) by_hi = b.y;
  }
  const Rational cbx = (bx_lo + bx_hi) / 2, cby = (by_lo + by_hi) / 2;
  const Rational W = bx_hi - bx_lo, H = by_hi - by_lo;

  for (int outer = 0; outer < 64; ++outer, h /= 2) {
    const Rational sx = W > 0 ? h / W : Rational(1);
    const Rational sy = H > 0 ? h / H : Rational(0);
    bool shrink = false;
    for (int t = 0; t < 512 && !shrink; ++t) {
      std::vector<Point> pts;
      pts.reserve(m * nb);
      for (std::size_t a = 0; a < m; ++a) {
        // Deterministic per-copy vertical micro-offset; zero on the first
        // attempt, distinct across copies afterwards.  Bounded by h/2.
        const Rational off(BigInt(t) * (a + 1), BigInt(2) * m * (t + 1));
        for (const Point& b : B)
          pts.push_back({A[a].x + sx * (b.x - cbx),
                         A[a].y + sy * (b.y - cby) + off * h});
      }
      PointSet U;
      try {
        U = validate(std::move(pts));
      } catch (const Error&) {
        continue;  // collinearity broken by the next offset step
      }

      // (a) x-disjoint boxes in A's order.
      bool ok = true;
      for (std::size_t a = 0; a + 1 < m && ok; ++a)
        if (!(A[a].x + h < A[a + 1].x - h)) ok = false;
      if (!ok) {
        shrink = true;
        break;
      }

      // (b) each copy carries B's signature.  U is copy-blocked in x-order.
      for (std::size_t a = 0; a < m && ok; ++a) {
        std::vector<std::size_t> idx(nb);
        for (std::size_t i = 0; i < nb; ++i) idx[i] = a * nb + i;
        if (!same_signature(subset(U, idx), B)) ok = false;
      }
      if (!ok)
        fail(errc::invalid_argument,
             "product: internal error, copy lost its signature");

      // (c) cross-copy lines clear every third box on the prescribed side.
      for (std::size_t s = 0; s < m && ok; ++s)
        for (std::size_t tt = 0; tt < m && ok; ++tt) {
          if (s == tt) continue;
          for (std::size_t w = 0; w < m && ok; ++w) {
            if (w == s || w == tt) continue;
            const Orientation want = orient(A[s], A[tt], A[w]);
            for (std::size_t iu = 0; iu < nb && ok; ++iu)
              for (std::size_t iv = 0; iv < nb && ok; ++iv) {
                const Point& u = U[s * nb + iu];
                const Point& v = U[tt * nb + iv];
                for (int cx = -1; cx <= 1 && ok; cx += 2)
                  for (int cy = -1; cy <= 1 && ok; cy += 2) {
                    const Point corner{A[w].x + cx * h, A[w].y + cy * h};
                    try {
                      if (orient(u, v, corner) != want) ok = false;
                    } catch (const Error&) {
                      ok = false;  // corner on the line: box not cleared
                    }
                  }
              }
          }
        }
      if (!ok) {
        shrink = true;
        break;
      }
      return ProductDetail{std::move(U), std::vector<Point>(A.begin(), A.end()),
                           h};
    }
  }
  fail(errc::invalid_argument, "product: could not realize within retry cap");
}

inline PointSet product(const PointSet& A, const PointSet& B,
                        const BuildBudget& budget = {}) {
  detail::BudgetTracker tr(budget);
  return product_detailed(A, B, tr).set;
}

// Left fold of product over the list.
inline PointSet sequence_product(const std::vector<PointSet>& Qs,
                                 const BuildBudget& budget = {}) {
  if (Qs.empty()) fail(errc::invalid_argument, "sequence product: empty list");
  detail::BudgetTracker tr(budget);
  PointSet R = Qs[0];
  for (std::size_t i = 1; i < Qs.size(); ++i)
    R = product_detailed(R, Qs[i], tr).set;
  return R;
}

namespace detail {

inline PointSet sequence_product_tracked(const std::vector<PointSet>& Qs,
                                         BudgetTracker& tr) {
  PointSet R = Qs[0];
  for (std::size_t i = 1; i < Qs.size(); ++i)
    R = product_detailed(R, Qs[i], tr).set;
  return R;
}

inline PointSet repeat_product_tracked(const PointSet& S, std::size_t copies,
                                       BudgetTracker& tr) {
  PointSet R = S;
  for (std::size_t i = 1; i < copies; ++i) R = product_detailed(R, S, tr).set;
  return R;
}

}  // namespace detail

struct StackResult {
  PointSet set;
  std::size_t cut;  // is_splitting(set, cut) holds; cut == |S1|
};

// Flattens both sets, lifts the second by one unit and shifts it right of
// the first, so the pair becomes a splitting; the flattening factor is
// halved until the exact re-checks (validity, splitting, both signatures)
// all pass.
inline StackResult stack_splitting(const PointSet& S1, const PointSet& S2,
                                   const BuildBudget& budget = {}) {
  if (S1.empty() || S2.empty())
    fail(errc::invalid_argument, "stack: empty part");
  detail::BudgetTracker tr(budget);
  tr.charge(S1.size() + S2.size(), "stack");

  auto slope_bound = [](const PointSet& S) {
    Rational best = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        Rational sl = (S[j].y - S[i].y) / (S[j].x - S[i].x);
        if (sl < 0) sl = -sl;
        if (sl > best) best = sl;
      }
    return best;
  };
  auto y_bound = [](const PointSet& S) {
    Rational best = 0;
    for (const Point& p : S) {
      Rational a = p.y < 0 ? -p.y : p.y;
      if (a > best) best = a;
    }
    return best;
  };
  const Rational w1 =
      S1.empty() ? Rational(0) : Rational(S1[S1.size() - 1].x - S1[0].x);
  const Rational w2 =
      S2.empty() ? Rational(0) : Rational(S2[S2.size() - 1].x - S2[0].x);
  const Rational W = w1 + w2 + 1;
  Rational M = slope_bound(S1);
  if (slope_bound(S2) > M) M = slope_bound(S2);
  Rational Y = y_bound(S1);
  if (y_bound(S2) > Y) Y = y_bound(S2);
  Rational lam = Rational(1) / (4 * (M * W + Y + 1));
  if (lam > 1) lam = 1;

  for (int it = 0; it < 200; ++it, lam /= 2) {
    std::vector<Point> pts;
    pts.reserve(S1.size() + S2.size());
    for (const Point& p : S1) pts.push_back({p.x - S1[0].x, lam * p.y});
    for (const Point& p : S2)
      pts.push_back({p.x - S2[0].x + w1 + 1, lam * p.y + 1});
    PointSet U;
    try {
      U = validate(std::move(pts));
    } catch (const Error&) {
      continue;
    }
    if (!is_splitting(U, S1.size())) continue;
    std::vector<std::size_t> lo(S1.size()), hi(S2.size());
    for (std::size_t i = 0; i < S1.size(); ++i) lo[i] = i;
    for (std::size_t i = 0; i < S2.size(); ++i) hi[i] = S1.size() + i;
    if (!same_signature(subset(U, lo), S1) || !same_signature(subset(U, hi), S2))
      fail(errc::invalid_argument, "stack: internal error, signature broken");
    return StackResult{std::move(U), S1.size()};
  }
  fail(errc::invalid_argument, "stack: could not realize within retry cap");
}

namespace detail {

// Side-by-side placement of blocks (gap 1 in x), with a vertical offset
// schedule to break cross-block collinearity.  Preserves each block's
// signature and keeps blocks x-contiguous in order.
inline PointSet assemble_blocks(const std::vector<PointSet>& blocks,
                                BudgetTracker& tr) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  tr.charge(total, "assembly");
  const std::size_t m = blocks.size();
  for (int t = 0; t < 4096; ++t) {
    std::vector<Point> pts;
    pts.reserve(total);
    Rational xoff = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const PointSet& B = blocks[j];
      const Rational yoff(BigInt(t) * (j + 1), BigInt(t + 1) * (m + 1));
      for (const Point& p : B) pts.push_back({p.x - B[0].x + xoff, p.y + yoff});
      xoff += B[B.size() - 1].x - B[0].x + 1;
    }
    try {
      return validate(std::move(pts));
    } catch (const Error&) {
      continue;
    }
  }
  fail(errc::invalid_argument, "assembly: could not realize within retry cap");
}

}  // namespace detail

struct AmplifierResult {
  PointSet set;
  std::size_t cut;  // boundary between the two product parts
};

// R1 handles k-colorings of S1-transversals, R2 handles k^{|R1|}-colorings
// of S2; stacking R1 deep below R2 yields the bipartite amplifier.  Sizes
// are |S1|^k and |S2|^(k^|S1|^k), so everything is pre-checked against the
// budget in big-integer arithmetic before any point is placed.
inline AmplifierResult bipartite_amplifier(const PointSet& S1,
                                           const PointSet& S2, std::size_t k,
                                           const BuildBudget& budget = {}) {
  if (S1.empty() || S2.empty())
    fail(errc::invalid_argument, "amplifier: empty part");
  if (k == 0) fail(errc::invalid_argument, "amplifier: k must be positive");
  detail::BudgetTracker tr(budget);

  const BigInt cap = budget.max_points;
  auto fold_cost = [&](BigInt s, const BigInt& copies, BigInt& final_size) {
    // Cumulative points charged by repeat_product over `copies` copies.
    BigInt cum = 0, cur = s;
    for (BigInt i = 1; i < copies; ++i) {
      cur *= s;
      cum += cur;
      if (cum > cap) return cum;  // early abort, already over
    }
    final_size = cur;
    return cum;
  };

  BigInt r1_size = 0;
  const BigInt cost_r1 = fold_cost(S1.size(), k, r1_size);
  if (cost_r1 > cap)
    fail(errc::budget_exceeded,
         "amplifier: first factor |S1|^k alone exceeds the point budget");

  // copies2 = k^{|R1|}; abort as soon as the *cost* of folding that many
  // copies of S2 must exceed the budget.
  BigInt copies2 = 1;
  bool copies2_over = false;
  for (BigInt i = 0; i < r1_size; ++i) {
    copies2 *= k;
    if (S2.size() >= 2 && copies2 > cap) {
      copies2_over = true;
      break;
    }
    if (S2.size() == 1 && copies2 > (BigInt(1) << 62)) {
      copies2_over = false;  // harmless: folding singletons stays one point
      copies2 = 1;
      break;
    }
  }
  BigInt r2_size = 1;
  BigInt cost_r2 = 0;
  if (S2.size() >= 2) {
    if (!copies2_over) cost_r2 = fold_cost(S2.size(), copies2, r2_size);
    if (copies2_over || cost_r1 + cost_r2 + r1_size + r2_size > cap)
      fail(errc::budget_exceeded,
           "amplifier: second factor explodes (k^|R1| = " + std::string(
               copies2_over ? ">" : "") + copies2.str() +
               " copies of S2 exceed the point budget)");
  }

  PointSet R1 = detail::repeat_product_tracked(S1, k, tr);
  PointSet R2 = S2.size() == 1
                    ? S2
                    : detail::repeat_product_tracked(
                          S2, static_cast<std::size_t>(copies2), tr);
  StackResult st = stack_splitting(R1, R2, budget);
  return AmplifierResult{std::move(st.set), R1.size()};
}

// Recursive construction: one point when any target is a single point, the
// target itself for one color, otherwise split every target, recurse on
// both halves, assemble the halves side by side and amplify.
inline PointSet ramsey_build(const std::vector<PointSet>& Qs,
                             const BuildBudget& budget = {}) {
  if (Qs.empty()) fail(errc::invalid_argument, "ramsey build: no targets");
  const std::size_t k = Qs.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (Qs[i].empty())
      fail(errc::invalid_argument, "ramsey build: empty target", {i + 1});
    if (!decompose(Qs[i]))
      fail(errc::not_decomposable, "ramsey build: target not decomposable",
           {i + 1});
  }

  detail::BudgetTracker tr(budget);
  auto rec = [&](auto&& self, const std::vector<PointSet>& qs,
                 std::size_t depth) -> PointSet {
    if (depth > budget.max_depth)
      fail(errc::budget_exceeded, "ramsey build: recursion depth over budget",
           {depth, budget.max_depth});
    if (qs.size() == 1) {
      tr.charge(qs[0].size(), "base case");
      return qs[0];
    }
    for (const auto& q : qs)
      if (q.size() == 1) {
        tr.charge(1, "base case");
        return validate({Point{Rational(0), Rational(0)}});
      }

    std::vector<PointSet> T, U;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const auto tree = decompose(qs[i]);
      if (!tree)
        fail(errc::not_decomposable, "ramsey build: target not decomposable",
             {i + 1});
      // Root cut = number of leaves in the left subtree.
      const std::size_t cut = tree->leaf_count(tree->left(tree->root()));
      std::vector<std::size_t> pre(cut), suf(qs[i].size() - cut);
      for (std::size_t a = 0; a < cut; ++a) pre[a] = a;
      for (std::size_t a = cut; a < qs[i].size(); ++a) suf[a - cut] = a;

      std::vector<PointSet> qs_pre = qs, qs_suf = qs;
      qs_pre[i] = subset(qs[i], pre);
      qs_suf[i] = subset(qs[i], suf);
      T.push_back(self(self, qs_pre, depth + 1));
      U.push_back(self(self, qs_suf, depth + 1));
    }
    PointSet s1 = detail::assemble_blocks(T, tr);
    PointSet s2 = detail::assemble_blocks(U, tr);

    // Amplifier with the budget that remains on this tracker.
    BuildBudget rem = budget;
    rem.max_points = budget.max_points - tr.built();
    AmplifierResult amp = bipartite_amplifier(s1, s2, qs.size(), rem);
    tr.charge(amp.set.size(), "amplifier result");
    return std::move(amp.set);
  };
  return rec(rec, Qs, 1);
}

}  // namespace otk
