#pragma once

// The crossing-order pair predicate.  For points p,q of an n-point set, let
// iota(p) be the dual-line rank (decreasing slope; iota(p) = n - x_position).
// Then
//   psi_table(p,q) = flag(iota(p), iota(q))     when iota(p) > iota(q),
//                    flag(iota(p), iota(q) - 1) otherwise,
// where flag(r,j) says whether the j-th crossing along line r is with a
// larger-rank line.  The point ranks are recoverable from row sums, and the
// whole arrangement — hence the order type — is recoverable from the flags
// by simulating the line sweep: start from the vertical order at x = -inf
// (rank 1 at the bottom, rank n on top) and repeatedly commit a swap of
// vertically adjacent lines whose next unconsumed flags are compatible.
// The greedy bottom-up scan is conjectured to never deadlock on realizable
// input; a depth-first fallback covers the gap and a stats counter reports
// whether it ever fired.

#include <optional>
#include <vector>

#include "otk/dual.hpp"
#include "otk/predicate_table.hpp"

namespace otk {

inline PredicateTable psi_encode(const PointSet& P) {
  const std::size_t n = P.size();
  const auto flags = psi_matrix(P);
  PredicateTable T(n, {"0", "1"});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const std::size_t ip = n - p, iq = n - q;
      const std::size_t col = (ip > iq) ? iq : iq - 1;
      T.set_value(p, q, static_cast<std::size_t>(flags[ip - 1][col - 1]));
    }
  return T;
}

namespace detail {

inline std::size_t psi_bit(const PredicateTable& T, std::size_t p,
                           std::size_t q) {
  if (T.codomain() != std::vector<std::string>{"0", "1"})
    fail(errc::invalid_argument, "psi table must have codomain {0,1}");
  return T.label(T.value(p, q)) == "1" ? 1 : 0;
}

}  // namespace detail

// Rank recovery: iota(p) = n - sum_q psi(p,q).  The ranks must form a
// permutation of 1..n, else the table cannot be a crossing table.
inline std::vector<std::size_t> iota_recover(const PredicateTable& T) {
  const std::size_t n = T.size();
  std::vector<std::size_t> iota(n, 0);
  std::vector<bool> hit(n + 1, false);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t s = 0;
    for (std::size_t q = 0; q < n; ++q)
      if (q != p) s += detail::psi_bit(T, p, q);
    if (s >= n) fail(errc::not_a_bijection, "iota recovery: row sum too large",
                     {p + 1});
    iota[p] = n - s;
    if (hit[iota[p]])
      fail(errc::not_a_bijection, "iota recovery: ranks collide", {p + 1});
    hit[iota[p]] = true;
  }
  return iota;
}

struct DecodeStats {
  bool used_backtracking = false;
  std::size_t nodes = 0;  // swap commits explored, undone ones included
};

// Reconstructs the order type encoded by a psi table.  Output is indexed by
// x-position (the rank relabeling is undone).  Throws decode_failure when
// the table is not realizable (or not decidable within the node budget).
inline OrderTypeTable psi_decode(const PredicateTable& T,
                                 DecodeStats* stats = nullptr,
                                 std::size_t node_budget = 1u << 22) {
  const std::size_t n = T.size();
  std::vector<std::size_t> iota;
  try {
    iota = iota_recover(T);
  } catch (const Error& e) {
    fail(errc::decode_failure,
         std::string("psi decode: rank recovery failed: ") + e.what());
  }

  // Flag rows keyed by rank: row r (1-based) has n-1 flags.
  std::vector<std::vector<int>> flags(n, std::vector<int>(n ? n - 1 : 0, 0));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const std::size_t ip = iota[p], iq = iota[q];
      const std::size_t col = (ip > iq) ? iq : iq - 1;
      flags[ip - 1][col - 1] = static_cast<int>(detail::psi_bit(T, p, q));
    }

  // Sweep state.  order: bottom-to-top line ranks; ptr: flags consumed.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
  std::vector<std::size_t> ptr(n + 1, 0);
  std::vector<bool> crossed(n * n + n + 1, false);
  auto crossed_at = [n](std::size_t u, std::size_t v) { return u * n + v; };
  std::vector<std::vector<std::size_t>> seq(n + 1);

  const std::size_t total = n < 2 ? 0 : n * (n - 1) / 2;
  std::size_t done = 0, nodes = 0;
  bool fell_back = false;

  auto eligible = [&](std::size_t t) {
    const std::size_t u = order[t], v = order[t + 1];
    if (crossed[crossed_at(u, v)]) return false;
    if (ptr[u] >= n - 1 || ptr[v] >= n - 1) return false;
    return flags[u - 1][ptr[u]] == (v > u ? 1 : 0) &&
           flags[v - 1][ptr[v]] == (u > v ? 1 : 0);
  };
  auto commit = [&](std::size_t t) {
    const std::size_t u = order[t], v = order[t + 1];
    seq[u].push_back(v);
    seq[v].push_back(u);
    ++ptr[u];
    ++ptr[v];
    crossed[crossed_at(u, v)] = crossed[crossed_at(v, u)] = true;
    std::swap(order[t], order[t + 1]);
    ++done;
  };
  auto undo = [&](std::size_t t) {
    std::swap(order[t], order[t + 1]);
    const std::size_t u = order[t], v = order[t + 1];
    seq[u].pop_back();
    seq[v].pop_back();
    --ptr[u];
    --ptr[v];
    crossed[crossed_at(u, v)] = crossed[crossed_at(v, u)] = false;
    --done;
  };

  // Greedy pass: always the lowest eligible adjacency.
  while (done < total) {
    bool moved = false;
    for (std::size_t t = 0; t + 1 < n && !moved; ++t)
      if (eligible(t)) {
        commit(t);
        ++nodes;
        moved = true;
      }
    if (!moved) break;
  }

  if (done < total) {
    // Deadlock: reset wholesale and run the exhaustive variant.
    fell_back = true;
    for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
    std::fill(ptr.begin(), ptr.end(), 0);
    std::fill(crossed.begin(), crossed.end(), false);
    for (auto& s : seq) s.clear();
    done = 0;

    auto dfs = [&](auto&& self) -> bool {
      if (done == total) return true;
      if (++nodes > node_budget)
        fail(errc::decode_failure, "psi decode: search budget exhausted");
      for (std::size_t t = 0; t + 1 < n; ++t) {
        if (!eligible(t)) continue;
        commit(t);
        if (self(self)) return true;
        undo(t);
      }
      return false;
    };
    if (!dfs(dfs))
      fail(errc::decode_failure, "psi decode: table is not realizable");
  }

  if (stats) {
    stats->used_backtracking = fell_back;
    stats->nodes = nodes;
  }

  // Positions of each partner along each line, for O(1) order lookups.
  std::vector<std::vector<std::size_t>> pos(n + 1,
                                            std::vector<std::size_t>(n + 1, 0));
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t j = 0; j < seq[r].size(); ++j) pos[r][seq[r][j]] = j;

  // A sorted primal triple (i<j<k by x) maps to ranks a>b>c; it turns
  // counterclockwise exactly when line b meets line a before line c.
  std::vector<std::int8_t> vals;
  vals.reserve(total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::size_t a = iota[i], b = iota[j], c = iota[k];
        vals.push_back(pos[b][a] < pos[b][c] ? std::int8_t{1} : std::int8_t{-1});
      }
  return OrderTypeTable(n, std::move(vals));
}

// encode-then-decode must reproduce the source orientations exactly.
inline bool psi_roundtrip(const PointSet& P, DecodeStats* stats = nullptr) {
  return psi_decode(psi_encode(P), stats) == OrderTypeTable(P);
}

}  // namespace otk
