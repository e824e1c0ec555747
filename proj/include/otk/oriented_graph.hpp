#pragma once

// A predicate table T on P induces a partially oriented complete graph plus
// an edge-class coloring: the edge {u,v} is oriented u->v when T(u,v) comes
// before T(v,u) in the codomain order, unoriented when they are equal, and
// its class is the unordered value pair {T(u,v), T(v,u)}.  Graph + coloring
// losslessly determine T.  On top of that sit the two triangle obstruction
// checkers used to refute local consistency on monochromatic subgraphs.

#include <array>
#include <optional>
#include <utility>

#include "otk/point_set.hpp"
#include "otk/predicate_table.hpp"

namespace otk {

class PartiallyOrientedGraph {
 public:
  PartiallyOrientedGraph() : n_(0) {}
  explicit PartiallyOrientedGraph(std::size_t n)
      : n_(n), state_(n < 2 ? 0 : n * (n - 1) / 2, 0) {}

  std::size_t size() const { return n_; }

  // +1: oriented u->v, -1: oriented v->u, 0: unoriented.
  int state(std::size_t u, std::size_t v) const {
    return u < v ? +state_[rank(u, v)] : -state_[rank(v, u)];
  }
  bool oriented(std::size_t u, std::size_t v) const {
    return state(u, v) != 0;
  }
  void orient(std::size_t from, std::size_t to) {
    if (from < to)
      state_[rank(from, to)] = +1;
    else
      state_[rank(to, from)] = -1;
  }
  void unorient(std::size_t u, std::size_t v) {
    state_[u < v ? rank(u, v) : rank(v, u)] = 0;
  }

  // Source/sink relative to an induced vertex subset.
  template <typename Verts>
  bool is_source(std::size_t v, const Verts& verts) const {
    for (std::size_t u : verts)
      if (u != v && state(v, u) != +1) return false;
    return true;
  }
  template <typename Verts>
  bool is_sink(std::size_t v, const Verts& verts) const {
    for (std::size_t u : verts)
      if (u != v && state(v, u) != -1) return false;
    return true;
  }

  friend bool operator==(const PartiallyOrientedGraph&,
                         const PartiallyOrientedGraph&) = default;

 private:
  std::size_t rank(std::size_t i, std::size_t j) const {
    if (j >= n_)
      fail(errc::invalid_argument, "graph: vertex out of range", {j + 1});
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }
  std::size_t n_;
  std::vector<std::int8_t> state_;
};

// Unordered codomain-value pairs {a,b}, a <= b, ranked lexicographically:
// (0,0),(0,1),...,(0,k-1),(1,1),...  There are C(k+1,2) classes.
class EdgeClassColoring {
 public:
  EdgeClassColoring() : n_(0) {}
  EdgeClassColoring(std::size_t n, std::vector<std::string> codomain)
      : n_(n),
        labels_(std::move(codomain)),
        cls_(n < 2 ? 0 : n * (n - 1) / 2, 0) {
    if (labels_.empty())
      fail(errc::invalid_argument, "edge classes: empty codomain");
  }

  std::size_t size() const { return n_; }
  std::size_t codomain_size() const { return labels_.size(); }
  const std::vector<std::string>& codomain() const { return labels_; }
  std::size_t class_count() const {
    const std::size_t k = labels_.size();
    return k * (k + 1) / 2;
  }

  static std::size_t class_rank(std::size_t a, std::size_t b, std::size_t k) {
    if (a > b) std::swap(a, b);
    if (b >= k) fail(errc::invalid_argument, "edge classes: value out of range");
    return a * k - a * (a - 1) / 2 + (b - a);
  }
  // Inverse of class_rank: the unordered value pair (a, b), a <= b.
  static std::pair<std::size_t, std::size_t> class_values(std::size_t rank,
                                                          std::size_t k) {
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t row = k - a;  // classes (a,a)..(a,k-1)
      if (rank < row) return {a, a + rank};
      rank -= row;
    }
    fail(errc::invalid_argument, "edge classes: class rank out of range");
  }

  std::size_t at(std::size_t u, std::size_t v) const {
    return cls_[rank(u, v)];
  }
  void set(std::size_t u, std::size_t v, std::size_t cls) {
    if (cls >= class_count())
      fail(errc::invalid_argument, "edge classes: class rank out of range");
    cls_[rank(u, v)] = cls;
  }

  friend bool operator==(const EdgeClassColoring&,
                         const EdgeClassColoring&) = default;

 private:
  std::size_t rank(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    if (u == v || v >= n_)
      fail(errc::invalid_argument, "edge classes: bad pair", {u + 1, v + 1});
    return u * n_ - u * (u + 1) / 2 + (v - u - 1);
  }
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> cls_;
};

inline PredicateTable reconstruct_table(const PartiallyOrientedGraph& G,
                                        const EdgeClassColoring& C) {
  if (G.size() != C.size())
    fail(errc::size_mismatch, "reconstruct: graph/coloring size mismatch",
         {G.size(), C.size()});
  PredicateTable T(G.size(), C.codomain());
  for (std::size_t u = 0; u < G.size(); ++u)
    for (std::size_t v = u + 1; v < G.size(); ++v) {
      const auto [lo, hi] = EdgeClassColoring::class_values(
          C.at(u, v), C.codomain_size());
      const int s = G.state(u, v);
      T.set_value(u, v, s >= 0 ? lo : hi);
      T.set_value(v, u, s >= 0 ? (s == 0 ? lo : hi) : lo);
    }
  return T;
}

inline std::pair<PartiallyOrientedGraph, EdgeClassColoring> build_graph(
    const PointSet& P, const PredicateTable& T) {
  if (T.size() != P.size())
    fail(errc::size_mismatch, "build_graph: table size != point count",
         {T.size(), P.size()});
  const std::size_t n = T.size(), k = T.codomain_size();
  PartiallyOrientedGraph G(n);
  EdgeClassColoring C(n, T.codomain());
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t fwd = T.value(u, v), bwd = T.value(v, u);
      if (fwd < bwd)
        G.orient(u, v);
      else if (bwd < fwd)
        G.orient(v, u);
      C.set(u, v, EdgeClassColoring::class_rank(fwd, bwd, k));
    }
  if (!(reconstruct_table(G, C) == T))
    fail(errc::invalid_argument, "build_graph: round trip failed");
  return {std::move(G), std::move(C)};
}

// The three monochromatic triangle-pair patterns that rule out local
// consistency when the two triangles have opposite orientations.
enum class ObstructionKind {
  all_unoriented,       // no edge of either triangle is oriented
  matching_cycles,      // both are directed 3-cycles a1->a2->a3->a1
  matching_transitive,  // a1 source and a3 sink in both triangles
};

namespace detail {

inline void check_triple(const std::array<std::size_t, 3>& t, std::size_t n) {
  if (t[0] >= n || t[1] >= n || t[2] >= n || t[0] == t[1] || t[0] == t[2] ||
      t[1] == t[2])
    fail(errc::precondition_violated, "obstruction: malformed triple",
         {t[0] + 1, t[1] + 1, t[2] + 1});
}

inline bool directed_cycle(const PartiallyOrientedGraph& G,
                           const std::array<std::size_t, 3>& t) {
  return G.state(t[0], t[1]) == +1 && G.state(t[1], t[2]) == +1 &&
         G.state(t[2], t[0]) == +1;
}

inline bool source_sink(const PartiallyOrientedGraph& G,
                        const std::array<std::size_t, 3>& t) {
  return G.is_source(t[0], t) && G.is_sink(t[2], t);
}

}  // namespace detail

inline std::optional<ObstructionKind> classify_triangle_obstruction(
    const PointSet& P, const PartiallyOrientedGraph& G,
    const EdgeClassColoring& C, const std::array<std::size_t, 3>& a,
    const std::array<std::size_t, 3>& b) {
  if (G.size() != P.size() || C.size() != P.size())
    fail(errc::size_mismatch, "obstruction: size mismatch",
         {P.size(), G.size(), C.size()});
  detail::check_triple(a, P.size());
  detail::check_triple(b, P.size());

  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa == sb)
    fail(errc::precondition_violated, "obstruction: identical vertex sets");

  // Both triangles must lie in one common edge class...
  const std::size_t cls = C.at(a[0], a[1]);
  for (const auto& t : {a, b})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (C.at(t[i], t[j]) != cls)
          fail(errc::precondition_violated,
               "obstruction: triangles are not monochromatic in one class",
               {t[i] + 1, t[j] + 1});
  // ...and carry opposite point-triple orientations.
  if (P.triple(a[0], a[1], a[2]) == P.triple(b[0], b[1], b[2]))
    fail(errc::precondition_violated,
         "obstruction: triangles have equal orientations");

  bool any_oriented = false;
  for (const auto& t : {a, b})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (G.oriented(t[i], t[j])) any_oriented = true;
  if (!any_oriented) return ObstructionKind::all_unoriented;

  if (detail::directed_cycle(G, a) && detail::directed_cycle(G, b))
    return ObstructionKind::matching_cycles;
  if (detail::source_sink(G, a) && detail::source_sink(G, b))
    return ObstructionKind::matching_transitive;
  return std::nullopt;
}

// For a 4-point set with exactly three extreme points: the only orientation
// patterns compatible with a locally consistent, single-class table are a
// directed hull 3-cycle with the interior point a global source or sink.
inline bool nonconvex_quad_allowed(const PointSet& Q,
                                   const PartiallyOrientedGraph& H) {
  if (Q.size() != 4 || H.size() != 4)
    fail(errc::not_nonconvex_quad, "quad check: need 4 points",
         {Q.size(), H.size()});
  const auto hull = extreme_points(Q);
  if (hull.size() != 3)
    fail(errc::not_nonconvex_quad, "quad check: need exactly 3 extreme points",
         {hull.size()});
  std::size_t inner = 0;
  while (std::find(hull.begin(), hull.end(), inner) != hull.end()) ++inner;

  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v)
      if (!H.oriented(u, v)) return false;

  const std::array<std::size_t, 3> t{hull[0], hull[1], hull[2]};
  const bool cycle = detail::directed_cycle(H, t) ||
                     detail::directed_cycle(H, {t[0], t[2], t[1]});
  const std::array<std::size_t, 4> all{0, 1, 2, 3};
  return cycle && (H.is_source(inner, all) || H.is_sink(inner, all));
}

}  // namespace otk
