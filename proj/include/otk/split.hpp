#pragma once

// The deep-below relation and recursive splittings.  A pair (P1,P2) splits P
// when P1 precedes P2 in x-order and P1 lies deep below P2: every point of
// P2 is above every line spanned by two points of P1, and every point of P1
// is below every line spanned by two points of P2.  Because the x-orders are
// required to be separated, every splitting of a set is a prefix cut of its
// x-order (asserted by tests, relied on here): decomposition search only
// ever scans cut positions.  A SplitTree witnesses a full recursive
// decomposition down to singletons.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "otk/point_set.hpp"

namespace otk {

// Binary witness tree, value-semantic (nodes live in one vector, root last).
class SplitTree {
 public:
  static SplitTree leaf(std::size_t index) {
    SplitTree t;
    t.nodes_.push_back({true, index, 0, 0});
    return t;
  }
  static SplitTree node(const SplitTree& l, const SplitTree& r) {
    SplitTree t;
    t.nodes_ = l.nodes_;
    const std::size_t off = t.nodes_.size();
    for (Node nd : r.nodes_) {
      if (!nd.is_leaf) {
        nd.l += off;
        nd.r += off;
      }
      t.nodes_.push_back(nd);
    }
    t.nodes_.push_back({false, 0, off - 1, t.nodes_.size() - 1});
    return t;
  }

  bool is_leaf(std::size_t v) const { return nodes_[v].is_leaf; }
  std::size_t leaf_index(std::size_t v) const { return nodes_[v].index; }
  std::size_t left(std::size_t v) const { return nodes_[v].l; }
  std::size_t right(std::size_t v) const { return nodes_[v].r; }
  std::size_t root() const { return nodes_.size() - 1; }

  // Leaf indices in left-to-right order.
  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    collect(root(), out);
    return out;
  }

  std::size_t leaf_count(std::size_t v) const {
    if (nodes_[v].is_leaf) return 1;
    return leaf_count(nodes_[v].l) + leaf_count(nodes_[v].r);
  }

  friend bool operator==(const SplitTree& a, const SplitTree& b) = default;

 private:
  struct Node {
    bool is_leaf;
    std::size_t index;  // leaf only
    std::size_t l, r;   // internal only
    friend bool operator==(const Node&, const Node&) = default;
  };
  void collect(std::size_t v, std::vector<std::size_t>& out) const {
    if (nodes_[v].is_leaf) {
      out.push_back(nodes_[v].index);
      return;
    }
    collect(nodes_[v].l, out);
    collect(nodes_[v].r, out);
  }
  std::vector<Node> nodes_;
};

// Nested-paren text form over 1-based leaf indices, e.g. ((1 2)(3 (4 5))).
inline std::string format_split_tree(const SplitTree& t) {
  auto rec = [&](auto&& self, std::size_t v) -> std::string {
    if (t.is_leaf(v)) return std::to_string(t.leaf_index(v) + 1);
    std::string l = self(self, t.left(v));
    std::string r = self(self, t.right(v));
    bool sep = std::isdigit(static_cast<unsigned char>(l.back())) ||
               std::isdigit(static_cast<unsigned char>(r.front()));
    return "(" + l + (sep ? " " : "") + r + ")";
  };
  return rec(rec, t.root());
}

inline SplitTree parse_split_tree(const std::string& s) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  auto rec = [&](auto&& self) -> SplitTree {
    skip();
    if (pos >= s.size())
      fail(errc::parse_error, "split tree: unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        v = v * 10 + (s[pos++] - '0');
      if (v == 0) fail(errc::parse_error, "split tree: leaf indices are 1-based");
      return SplitTree::leaf(v - 1);
    }
    if (s[pos] != '(')
      fail(errc::parse_error, "split tree: expected '(' or index");
    ++pos;
    SplitTree l = self(self);
    SplitTree r = self(self);
    skip();
    if (pos >= s.size() || s[pos] != ')')
      fail(errc::parse_error, "split tree: expected ')'");
    ++pos;
    return SplitTree::node(l, r);
  };
  SplitTree t = rec(rec);
  skip();
  if (pos != s.size()) fail(errc::parse_error, "split tree: trailing input");
  // The format covers exactly the prefix-cut trees: leaves read 1..n in order.
  std::vector<std::size_t> lv = t.leaves();
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (lv[i] != i)
      fail(errc::parse_error, "split tree: leaves must read 1..n in order");
  return t;
}

namespace detail {

// Deep-below check on contiguous spans [lo,mid) and [mid,hi) of one
// validated set; skips the union re-validation the public entry point does.
inline bool deep_below_spans(const PointSet& P, std::size_t lo,
                             std::size_t mid, std::size_t hi) {
  for (std::size_t i = lo; i < mid; ++i)
    for (std::size_t j = i + 1; j < mid; ++j)
      for (std::size_t w = mid; w < hi; ++w)
        if (P.triple(i, j, w) != Orientation::counterclockwise) return false;
  for (std::size_t i = mid; i < hi; ++i)
    for (std::size_t j = i + 1; j < hi; ++j)
      for (std::size_t w = lo; w < mid; ++w)
        if (orient(P[i], P[j], P[w]) != Orientation::clockwise) return false;
  return true;
}

}  // namespace detail

// Does B sit deep above A?  (Lines within A all run below B and vice versa.)
// The union must itself be a legal point set, else invalid_union.
inline bool deep_below(const PointSet& A, const PointSet& B) {
  std::vector<Point> all(A.begin(), A.end());
  all.insert(all.end(), B.begin(), B.end());
  PointSet U;
  try {
    U = validate(std::move(all));
  } catch (const Error& e) {
    fail(errc::invalid_union,
         std::string("deep_below: union is degenerate: ") + e.what());
  }
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      for (std::size_t w = 0; w < B.size(); ++w)
        if (orient(A[i], A[j], B[w]) != Orientation::counterclockwise)
          return false;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      for (std::size_t w = 0; w < A.size(); ++w)
        if (orient(B[i], B[j], A[w]) != Orientation::clockwise) return false;
  return true;
}

// Is the x-prefix of `cut` points deep below the rest?  cut in [1, n-1].
inline bool is_splitting(const PointSet& P, std::size_t cut) {
  if (P.size() < 2 || cut < 1 || cut >= P.size())
    fail(errc::bad_cut, "is_splitting: cut out of range", {cut, P.size()});
  return detail::deep_below_spans(P, 0, cut, P.size());
}

// Full recursive decomposition witness, or nothing if none exists.  Cuts are
// tried left to right at every level, so the witness is the lexicographically
// first one; intervals are memoized.
inline std::optional<SplitTree> decompose(const PointSet& P) {
  const std::size_t n = P.size();
  if (n == 0) fail(errc::invalid_argument, "decompose: empty set");

  // feasible[lo*(n+1)+hi]: -1 unknown, 0 no, 1 yes; cut[] the first witness.
  std::vector<int> feasible((n + 1) * (n + 1), -1);
  std::vector<std::size_t> first_cut((n + 1) * (n + 1), 0);
  auto solve = [&](auto&& self, std::size_t lo, std::size_t hi) -> bool {
    int& memo = feasible[lo * (n + 1) + hi];
    if (memo >= 0) return memo != 0;
    if (hi - lo == 1) {
      memo = 1;
      return true;
    }
    for (std::size_t mid = lo + 1; mid < hi; ++mid)
      if (detail::deep_below_spans(P, lo, mid, hi) && self(self, lo, mid) &&
          self(self, mid, hi)) {
        memo = 1;
        first_cut[lo * (n + 1) + hi] = mid;
        return true;
      }
    memo = 0;
    return false;
  };
  if (!solve(solve, 0, n)) return std::nullopt;

  auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> SplitTree {
    if (hi - lo == 1) return SplitTree::leaf(lo);
    const std::size_t mid = first_cut[lo * (n + 1) + hi];
    return SplitTree::node(self(self, lo, mid), self(self, mid, hi));
  };
  return build(build, 0, n);
}

// Convenience: the sub-PointSet on the given positions (re-validated).
inline PointSet subset(const PointSet& P, const std::vector<std::size_t>& idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (std::size_t i : idx) pts.push_back(P[i]);
  return validate(std::move(pts));
}

}  // namespace otk
