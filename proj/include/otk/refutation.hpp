#pragma once

// Five-point refutation machinery: a frozen witness set (two interior
// points, separation structure, decomposable), exhaustive enumeration of
// single-class predicate tables on a 5-point set, and backtracking searches
// for locally consistent tables (general and tournament-shaped).

#include <array>
#include <cstdint>
#include <optional>

#include "otk/local_consistency.hpp"
#include "otk/oriented_graph.hpp"
#include "otk/split.hpp"

namespace otk {

struct WitnessSearch {
  PointSet set;
  // Roles r1..r5 as 0-based positions into the x-sorted set: r3, r4 interior,
  // line r3r4 separates r5 from r1 and r2, line r1r3 separates r5 from r2
  // and r4, and dropping any of r1..r4 leaves a 4-set with 3 extreme points.
  std::array<std::size_t, 5> labeling;
};

namespace detail {

inline bool witness_labeling_ok(const PointSet& P,
                                const std::array<std::size_t, 5>& L) {
  const auto [r1, r2, r3, r4, r5] = L;
  const auto inner = interior_points(P);
  if (inner.size() != 2) return false;
  if ((inner[0] != r3 || inner[1] != r4) && (inner[0] != r4 || inner[1] != r3))
    return false;
  const auto side = [&](std::size_t a, std::size_t b, std::size_t c) {
    return P.triple(a, b, c);
  };
  if (side(r3, r4, r5) == side(r3, r4, r1)) return false;
  if (side(r3, r4, r5) == side(r3, r4, r2)) return false;
  if (side(r1, r3, r5) == side(r1, r3, r2)) return false;
  if (side(r1, r3, r5) == side(r1, r3, r4)) return false;
  for (std::size_t drop : {r1, r2, r3, r4}) {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < 5; ++v)
      if (v != drop) keep.push_back(v);
    if (extreme_points(subset(P, keep)).size() != 3) return false;
  }
  return true;
}

inline std::optional<std::array<std::size_t, 5>> find_witness_labeling(
    const PointSet& P) {
  std::array<std::size_t, 5> L{0, 1, 2, 3, 4};
  do {
    if (witness_labeling_ok(P, L)) return L;
  } while (std::next_permutation(L.begin(), L.end()));
  return std::nullopt;
}

}  // namespace detail

// Deterministic small-integer search for the witness: one point per column,
// grids scanned in increasing coordinate bound, candidates in lexicographic
// order.  Returns the first 5-set that is decomposable, has exactly three
// extreme points, and admits a role labeling per witness_labeling_ok.
inline std::optional<WitnessSearch> find_five_point_witness(
    std::size_t max_coord = 8) {
  // Points live on the five integer columns x = 0..4; only the heights are
  // searched, in [0..m]^5 with the bound m attained (so each m is new ground).
  for (std::size_t m = 2; m <= max_coord; ++m) {
    const long top = static_cast<long>(m);
    std::vector<long> y(5, 0);
    auto next = [&]() {
      for (std::size_t i = 5; i-- > 0;) {
        if (++y[i] <= top) return true;
        y[i] = 0;
      }
      return false;
    };
    do {
      if (std::find(y.begin(), y.end(), top) == y.end()) continue;
      std::vector<Point> pts;
      for (std::size_t i = 0; i < 5; ++i)
        pts.push_back({Rational(static_cast<long>(i)), Rational(y[i])});
      try {
        PointSet P = validate(pts);
        if (extreme_points(P).size() != 3) continue;
        auto L = detail::find_witness_labeling(P);
        if (!L) continue;
        if (!decompose(P)) continue;
        return WitnessSearch{P, *L};
      } catch (const Error&) {
        continue;  // collinear triple somewhere on the grid
      }
    } while (next());
  }
  return std::nullopt;
}

// Frozen output of find_five_point_witness(); the CLI can re-run the search
// and a test compares it against this constant, so startup stays cheap.
inline const WitnessSearch& five_point_witness() {
  static const WitnessSearch w = [] {
    const PointSet set = validate({{Rational(0), Rational(0)},
                                   {Rational(1), Rational(4)},
                                   {Rational(2), Rational(2)},
                                   {Rational(3), Rational(1)},
                                   {Rational(4), Rational(1)}});
    return WitnessSearch{set, {1, 4, 2, 3, 0}};
  }();
  return w;
}

struct RefutationReport {
  std::size_t enumerated = 0;
  std::size_t consistent = 0;
  std::optional<PredicateTable> first_consistent;
};

// Enumerates the single-class predicate tables on a 5-point set up to class
// relabeling: the all-unoriented representative, plus (for k >= 2) all 2^10
// full orientations of one two-valued class.  Counts the locally consistent
// ones; zero for the witness shape, nonzero for e.g. a convex 5-gon.
inline RefutationReport refute_monochromatic(const PointSet& R,
                                             std::size_t k) {
  if (R.size() != 5)
    fail(errc::wrong_witness_shape, "refutation: need exactly 5 points",
         {R.size()});
  if (k == 0) fail(errc::invalid_argument, "refutation: k must be positive");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));

  RefutationReport rep;
  auto consider = [&](const PredicateTable& T) {
    ++rep.enumerated;
    if (!is_locally_consistent(R, T)) {
      ++rep.consistent;
      if (!rep.first_consistent) rep.first_consistent = T;
    }
  };

  consider(PredicateTable(5, labels));  // constant: every edge unoriented

  if (k >= 2) {
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
      PredicateTable T(5, labels);
      std::size_t e = 0;
      for (std::size_t u = 0; u < 5; ++u)
        for (std::size_t v = u + 1; v < 5; ++v, ++e) {
          const bool fwd = (mask >> e) & 1u;
          T.set_value(u, v, fwd ? 0 : 1);
          T.set_value(v, u, fwd ? 1 : 0);
        }
      consider(T);
    }
  }
  return rep;
}

namespace detail {

struct TripleConstraint {
  std::array<std::size_t, 3> a, b;  // b already carries one of the 6 labelings
};

// For incremental checking: constraints grouped by the search variable at
// which their last ordered pair gets a value.
inline std::vector<std::vector<TripleConstraint>> constraints_by_last_var(
    std::size_t n, const std::vector<std::vector<std::size_t>>& var_of_pair,
    std::size_t var_count) {
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

  auto last_var = [&](const std::array<std::size_t, 3>& t) {
    std::size_t last = 0;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s)
        if (r != s) last = std::max(last, var_of_pair[t[r]][t[s]]);
    return last;
  };

  std::vector<std::vector<TripleConstraint>> out(var_count);
  for (std::size_t ta = 0; ta < triples.size(); ++ta)
    for (std::size_t tb = ta + 1; tb < triples.size(); ++tb) {
      const std::size_t at = std::max(last_var(triples[ta]),
                                      last_var(triples[tb]));
      for (const auto& perm : kPerm3)
        out[at].push_back({triples[ta],
                           {triples[tb][perm[0]], triples[tb][perm[1]],
                            triples[tb][perm[2]]}});
    }
  return out;
}

}  // namespace detail

// Backtracking search for a locally consistent table with codomain size k.
// Variables are the ordered pairs in lexicographic order, values tried in
// codomain order, so the first hit is the lexicographically least table.
// With single_class set, only tables whose edge classes all coincide are
// considered (the monochromatic restriction).
inline std::optional<PredicateTable> search_predicate(
    const PointSet& P, std::size_t k, bool single_class = false,
    std::size_t node_budget = 10'000'000) {
  if (k == 0) fail(errc::invalid_argument, "predicate search: k = 0");
  const std::size_t n = P.size();
  if (n > 6)
    fail(errc::size_limit, "predicate search: supported up to 6 points",
         {n, 6});

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  PredicateTable T(n, labels);
  if (n < 3) return T;

  std::vector<std::pair<std::size_t, std::size_t>> vars;
  std::vector<std::vector<std::size_t>> var_of(n, std::vector<std::size_t>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) {
        var_of[u][v] = vars.size();
        vars.emplace_back(u, v);
      }
  const auto checks =
      detail::constraints_by_last_var(n, var_of, vars.size());

  // Precomputed orientations for constraint evaluation.
  auto orient_of = [&](const std::array<std::size_t, 3>& t) {
    return P.triple(t[0], t[1], t[2]);
  };

  std::size_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == vars.size()) return true;
    const auto [u, v] = vars[t];
    for (std::size_t val = 0; val < k; ++val) {
      if (++nodes > node_budget)
        fail(errc::search_budget, "predicate search: node budget exhausted",
             {node_budget});
      T.set_value(u, v, val);

      if (single_class && var_of[v][u] < t) {
        // edge {u,v} just completed; classes must all match the first edge
        const std::size_t a = std::min(T.value(u, v), T.value(v, u));
        const std::size_t b = std::max(T.value(u, v), T.value(v, u));
        const std::size_t r0 = std::min(T.value(0, 1), T.value(1, 0));
        const std::size_t r1 = std::max(T.value(0, 1), T.value(1, 0));
        if (var_of[1][0] <= t && (a != r0 || b != r1)) continue;
      }

      bool ok = true;
      for (const auto& c : checks[t]) {
        if (!detail::values_match(T, c.a, c.b)) continue;
        if (orient_of(c.a) != orient_of(c.b)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, t + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  if (is_locally_consistent(P, T))
    fail(errc::invalid_argument, "predicate search: found table inconsistent");
  return T;
}

// Tournament-shaped search: codomain {-1,+1} with value(v,u) = -value(u,v).
// One boolean per unordered pair; expected to succeed exactly on sets with
// at most one interior point.
inline std::optional<PredicateTable> antisymmetric_search(
    const PointSet& P, std::size_t node_budget = 50'000'000) {
  const std::size_t n = P.size();
  if (n > 7)
    fail(errc::size_limit, "tournament search: supported up to 7 points",
         {n, 7});
  PredicateTable T(n, {"-1", "+1"});
  if (n < 3) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) T.set_value(v, u, 1);
    return T;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> var_of(n, std::vector<std::size_t>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      var_of[u][v] = var_of[v][u] = edges.size();
      edges.emplace_back(u, v);
    }
  const auto checks =
      detail::constraints_by_last_var(n, var_of, edges.size());

  std::size_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == edges.size()) return true;
    const auto [u, v] = edges[t];
    for (std::size_t low = 0; low < 2; ++low) {
      if (++nodes > node_budget)
        fail(errc::search_budget, "tournament search: node budget exhausted",
             {node_budget});
      T.set_value(u, v, low);
      T.set_value(v, u, 1 - low);
      bool ok = true;
      for (const auto& c : checks[t]) {
        if (!detail::values_match(T, c.a, c.b)) continue;
        if (P.triple(c.a[0], c.a[1], c.a[2]) !=
            P.triple(c.b[0], c.b[1], c.b[2])) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, t + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  if (is_locally_consistent(P, T))
    fail(errc::invalid_argument, "tournament search: found table inconsistent");
  return T;
}

}  // namespace otk
