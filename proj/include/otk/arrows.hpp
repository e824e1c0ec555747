#pragma once

// Arrow verification by exhaustive or sampled coloring enumeration.
// A point arrow holds when every k-coloring of the points contains, for
// some color i, a subset of that color with the i-th target's signature.
// A pair arrow holds when every k-coloring of the pairs contains a subset
// whose pairs are monochromatic and whose geometry matches the target under
// the requested equality (signature or order type).  Counterexamples are
// the lexicographically least offending colorings because enumeration runs
// in odometer order over the lexicographic pair/point list.

#include <optional>

#include "otk/colorings.hpp"
#include "otk/rng.hpp"
#include "otk/split.hpp"

namespace otk {

enum class MatchMode { signature, ordertype };

// Enumerates subsets of `pool` (ascending positions of P) carrying Q's
// signature, lexicographically, with orientation pruning at every step.
// Stops (returning true) as soon as `visit` returns true.
template <typename Visit>
inline bool for_each_signature_copy(const PointSet& P,
                                    const std::vector<std::size_t>& pool,
                                    const PointSet& Q, Visit&& visit) {
  const std::size_t m = Q.size();
  if (m == 0) return visit(std::vector<std::size_t>{});
  if (pool.size() < m) return false;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() == m) return visit(pick);
    for (std::size_t t = from; t < pool.size(); ++t) {
      if (pool.size() - t < m - pick.size()) break;
      const std::size_t cand = pool[t];
      bool ok = true;
      const std::size_t r = pick.size();
      for (std::size_t a = 0; a < r && ok; ++a)
        for (std::size_t b = a + 1; b < r && ok; ++b)
          if (orient(P[pick[a]], P[pick[b]], P[cand]) != Q.triple(a, b, r))
            ok = false;
      if (!ok) continue;
      pick.push_back(cand);
      if (self(self, t + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

// Lexicographically first such subset, or none.
inline std::optional<std::vector<std::size_t>> find_signature_copy(
    const PointSet& P, const std::vector<std::size_t>& pool,
    const PointSet& Q) {
  std::optional<std::vector<std::size_t>> hit;
  for_each_signature_copy(P, pool, Q, [&](const std::vector<std::size_t>& s) {
    hit = s;
    return true;
  });
  return hit;
}

// Lexicographically first subset whose pairs all have one color and whose
// geometry matches Q under `mode`.
inline std::optional<std::vector<std::size_t>> monochromatic_copy_search(
    const PointSet& P, const PairColoring& col, const PointSet& Q,
    MatchMode mode) {
  if (P.size() != col.size())
    fail(errc::size_mismatch, "copy search: coloring size != point count",
         {P.size(), col.size()});
  const std::size_t n = P.size(), m = Q.size();
  if (m == 0) return std::vector<std::size_t>{};
  if (n < m) return std::nullopt;

  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from,
                 std::optional<std::uint8_t> c) -> bool {
    if (pick.size() == m) {
      if (mode == MatchMode::signature) return true;
      return same_order_type(subset(P, pick), Q).has_value();
    }
    for (std::size_t cand = from; cand < n; ++cand) {
      if (n - cand < m - pick.size()) break;
      auto cc = c;
      bool ok = true;
      for (std::size_t a = 0; a < pick.size() && ok; ++a) {
        const std::uint8_t pc = col.at(pick[a], cand);
        if (!cc)
          cc = pc;
        else if (*cc != pc)
          ok = false;
      }
      if (ok && mode == MatchMode::signature) {
        const std::size_t r = pick.size();
        for (std::size_t a = 0; a < r && ok; ++a)
          for (std::size_t b = a + 1; b < r && ok; ++b)
            if (orient(P[pick[a]], P[pick[b]], P[cand]) != Q.triple(a, b, r))
              ok = false;
      }
      if (!ok) continue;
      pick.push_back(cand);
      if (self(self, cand + 1, cc)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (rec(rec, 0, std::nullopt)) return pick;
  return std::nullopt;
}

struct VerifyStrategy {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t trials = 0;

  static VerifyStrategy all() { return {true, 0, 0}; }
  static VerifyStrategy sampled(std::uint64_t seed, std::size_t trials) {
    return {false, seed, trials};
  }
};

struct PairArrowResult {
  bool holds = false;
  std::optional<PairColoring> counterexample;
  std::size_t colorings_checked = 0;
};

struct PointArrowResult {
  bool holds = false;
  std::optional<PointColoring> counterexample;
  std::size_t colorings_checked = 0;
};

namespace detail {

// Odometer over base-k words of given length; returns false at wraparound.
inline bool next_word(std::vector<std::uint8_t>& w, std::size_t k) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (++w[i] < k) return true;
    w[i] = 0;
  }
  return false;
}

inline void check_enum_budget(std::size_t cells, std::size_t k,
                              std::size_t cap) {
  long double total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    total *= static_cast<long double>(k);
    if (total > static_cast<long double>(cap))
      fail(errc::enumeration_budget,
           "exhaustive verification would enumerate more than " +
               std::to_string(cap) + " colorings");
  }
}

}  // namespace detail

inline PairArrowResult verify_pair_arrow(const PointSet& P, const PointSet& Q,
                                         std::size_t k, MatchMode mode,
                                         VerifyStrategy strategy =
                                             VerifyStrategy::all(),
                                         std::size_t enum_cap = 1u << 22) {
  if (k == 0) fail(errc::invalid_argument, "pair arrow: k must be positive");
  PairArrowResult res;
  PairColoring col(P.size(), k);

  auto attempt = [&](const PairColoring& c) {
    ++res.colorings_checked;
    if (monochromatic_copy_search(P, c, Q, mode)) return true;
    res.holds = false;
    res.counterexample = c;
    return false;
  };

  if (strategy.exhaustive) {
    detail::check_enum_budget(col.pair_count(), k, enum_cap);
    std::vector<std::uint8_t> w(col.pair_count(), 0);
    do {
      for (std::size_t r = 0; r < w.size(); ++r) col.flat(r) = w[r];
      if (!attempt(col)) return res;
    } while (detail::next_word(w, k));
  } else {
    std::mt19937_64 g(strategy.seed);
    for (std::size_t t = 0; t < strategy.trials; ++t) {
      for (std::size_t r = 0; r < col.pair_count(); ++r)
        col.flat(r) = static_cast<std::uint8_t>(uniform_below(g, k));
      if (!attempt(col)) return res;
    }
  }
  res.holds = true;
  return res;
}

inline PointArrowResult verify_point_arrow(const PointSet& P,
                                           const std::vector<PointSet>& Qs,
                                           MatchMode mode = MatchMode::signature,
                                           VerifyStrategy strategy =
                                               VerifyStrategy::all(),
                                           std::size_t enum_cap = 1u << 22) {
  if (Qs.empty()) fail(errc::invalid_argument, "point arrow: no targets");
  const std::size_t k = Qs.size(), n = P.size();
  PointArrowResult res;

  auto has_copy = [&](const std::vector<std::size_t>& pool,
                      const PointSet& Q) {
    if (mode == MatchMode::signature)
      return find_signature_copy(P, pool, Q).has_value();
    // order-type mode: try subsets of the pool, smallest-lex first
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (pick.size() == Q.size())
        return same_order_type(subset(P, pick), Q).has_value();
      for (std::size_t t = from; t < pool.size(); ++t) {
        if (pool.size() - t < Q.size() - pick.size()) break;
        pick.push_back(pool[t]);
        if (self(self, t + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    return Q.size() == 0 || rec(rec, 0);
  };

  auto attempt = [&](const PointColoring& c) {
    ++res.colorings_checked;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> pool;
      for (std::size_t v = 0; v < n; ++v)
        if (c.color[v] == i) pool.push_back(v);
      if (has_copy(pool, Qs[i])) return true;
    }
    res.holds = false;
    res.counterexample = c;
    return false;
  };

  PointColoring col{n, k, std::vector<std::uint8_t>(n, 0)};
  if (strategy.exhaustive) {
    detail::check_enum_budget(n, k, enum_cap);
    std::vector<std::uint8_t> w(n, 0);
    do {
      col.color = w;
      if (!attempt(col)) return res;
    } while (detail::next_word(w, k));
  } else {
    std::mt19937_64 g(strategy.seed);
    for (std::size_t t = 0; t < strategy.trials; ++t) {
      for (auto& c : col.color)
        c = static_cast<std::uint8_t>(uniform_below(g, k));
      if (!attempt(col)) return res;
    }
  }
  res.holds = true;
  return res;
}

struct CrossArrowResult {
  bool holds = false;
  // counterexample coloring lives on the cross pairs only; within-part
  // pairs stay at color 0
  std::optional<PairColoring> counterexample;
  std::size_t colorings_checked = 0;
};

// Checks the amplifier contract on R split at `cut` into R1 | R2: every
// k-coloring of R1 x R2 must admit signature copies A of S1 inside R1 and
// B of S2 inside R2 with A x B monochromatic.
inline CrossArrowResult verify_cross_arrow(const PointSet& R, std::size_t cut,
                                           const PointSet& S1,
                                           const PointSet& S2, std::size_t k,
                                           std::size_t enum_cap = 1u << 22) {
  if (k == 0) fail(errc::invalid_argument, "cross arrow: k must be positive");
  if (cut == 0 || cut >= R.size())
    fail(errc::bad_cut, "cross arrow: cut outside the set", {cut, R.size()});
  const std::size_t n = R.size();
  std::vector<std::size_t> pool1, pool2;
  for (std::size_t v = 0; v < cut; ++v) pool1.push_back(v);
  for (std::size_t v = cut; v < n; ++v) pool2.push_back(v);
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (std::size_t i : pool1)
    for (std::size_t j : pool2) cross.emplace_back(i, j);
  detail::check_enum_budget(cross.size(), k, enum_cap);

  CrossArrowResult res;
  PairColoring col(n, k);
  std::vector<std::uint8_t> w(cross.size(), 0);
  do {
    for (std::size_t r = 0; r < cross.size(); ++r)
      col.set(cross[r].first, cross[r].second, w[r]);
    ++res.colorings_checked;
    bool found = false;
    for (std::uint8_t c = 0; c < k && !found; ++c)
      found = for_each_signature_copy(
          R, pool1, S1, [&](const std::vector<std::size_t>& A) {
            std::vector<std::size_t> pool2c;
            for (std::size_t x : pool2) {
              bool mono = true;
              for (std::size_t a : A)
                if (col.at(a, x) != c) mono = false;
              if (mono) pool2c.push_back(x);
            }
            return for_each_signature_copy(
                R, pool2c, S2,
                [&](const std::vector<std::size_t>&) { return true; });
          });
    if (!found) {
      res.holds = false;
      res.counterexample = col;
      return res;
    }
  } while (detail::next_word(w, k));
  res.holds = true;
  return res;
}

// Colors every sorted p-subset by the orientation of its entries at
// positions (i, i+1, i+2), i 1-based: clockwise -> color 0, counter -> 1.
inline TupleColoring adversary_coloring(const PointSet& P, std::size_t p,
                                        std::size_t i) {
  const std::size_t n = P.size();
  if (p < 3 || p > n)
    fail(errc::bad_index, "adversary coloring: need 3 <= p <= n", {p, n});
  if (i < 1 || i > p - 2)
    fail(errc::bad_index, "adversary coloring: need 1 <= i <= p-2", {i, p});

  TupleColoring out;
  out.n = n;
  out.p = p;
  out.k = 2;
  std::vector<std::size_t> tuple(p);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
    if (pos == p) {
      const Orientation o =
          P.triple(tuple[i - 1], tuple[i], tuple[i + 1]);
      out.color[tuple] =
          o == Orientation::counterclockwise ? std::uint8_t{1} : std::uint8_t{0};
      return;
    }
    for (std::size_t v = from; v < n; ++v) {
      if (n - v < p - pos) break;
      tuple[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace otk
