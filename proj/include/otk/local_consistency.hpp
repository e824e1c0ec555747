#pragma once

// Local consistency of a pair predicate against a point set: whenever two
// distinct labeled 3-subsets agree in all six ordered-pair values, their
// triple orientations must agree too.  The scan fixes the first triple in
// sorted labeling and runs the second through all six labelings — a pair of
// labelings only matters up to simultaneous permutation — in lexicographic
// order, so the reported violation is deterministic.
//
// Also here: value-preserving table isomorphisms and the encoding checker
// built on them (every isomorphism between encoded tables must carry
// orientations across).

#include <array>
#include <functional>
#include <optional>

#include "otk/point_set.hpp"
#include "otk/predicate_table.hpp"

namespace otk {

struct ConsistencyViolation {
  std::array<std::size_t, 3> tripleA;  // labeled, 0-based indices
  std::array<std::size_t, 3> tripleB;
  Orientation orientA, orientB;
};

namespace detail {

constexpr std::array<std::array<std::size_t, 3>, 6> kPerm3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

inline bool values_match(const PredicateTable& T,
                         const std::array<std::size_t, 3>& a,
                         const std::array<std::size_t, 3>& b) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s)
      if (r != s && T.value(a[r], a[s]) != T.value(b[r], b[s])) return false;
  return true;
}

}  // namespace detail

inline std::optional<ConsistencyViolation> is_locally_consistent(
    const PointSet& P, const PredicateTable& T) {
  if (P.size() != T.size())
    fail(errc::size_mismatch, "consistency check: table size != point count",
         {P.size(), T.size()});
  const std::size_t n = P.size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        triples.push_back({i, j, k});

  for (std::size_t ta = 0; ta < triples.size(); ++ta)
    for (std::size_t tb = ta + 1; tb < triples.size(); ++tb)
      for (const auto& perm : detail::kPerm3) {
        const auto& A = triples[ta];
        std::array<std::size_t, 3> B = {triples[tb][perm[0]],
                                        triples[tb][perm[1]],
                                        triples[tb][perm[2]]};
        if (!detail::values_match(T, A, B)) continue;
        const Orientation oa = orient(P[A[0]], P[A[1]], P[A[2]]);
        const Orientation ob = orient(P[B[0]], P[B[1]], P[B[2]]);
        if (oa != ob) return ConsistencyViolation{A, B, oa, ob};
      }
  return std::nullopt;
}

// All bijections f with T1(i,j) = T2(f(i),f(j)) (labels compared as strings),
// lexicographically ordered.  Rows are pruned by their value-pair multisets.
inline std::vector<std::vector<std::size_t>> gamma_isomorphisms(
    const PredicateTable& T1, const PredicateTable& T2,
    std::size_t size_cap = 8) {
  if (T1.size() != T2.size()) return {};
  const std::size_t n = T1.size();
  if (n > size_cap)
    fail(errc::size_limit, "gamma_isomorphisms: table larger than size cap",
         {n, size_cap});

  // Shared label ids so tables with reordered codomain lists still compare.
  std::vector<std::string> all;
  for (auto& l : T1.codomain()) all.push_back(l);
  for (auto& l : T2.codomain())
    if (std::find(all.begin(), all.end(), l) == all.end()) all.push_back(l);
  auto id_of = [&](const std::string& l) {
    return static_cast<std::size_t>(
        std::find(all.begin(), all.end(), l) - all.begin());
  };
  auto val1 = [&](std::size_t i, std::size_t j) {
    return id_of(T1.label(T1.value(i, j)));
  };
  auto val2 = [&](std::size_t i, std::size_t j) {
    return id_of(T2.label(T2.value(i, j)));
  };

  auto profile = [&](auto&& val, std::size_t i) {
    std::vector<std::pair<std::size_t, std::size_t>> prof;
    for (std::size_t q = 0; q < n; ++q)
      if (q != i) prof.emplace_back(val(i, q), val(q, i));
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> prof1(n),
      prof2(n);
  for (std::size_t i = 0; i < n; ++i) {
    prof1[i] = profile(val1, i);
    prof2[i] = profile(val2, i);
  }

  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> img(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      found.push_back(img);
      return;
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (used[q] || prof1[i] != prof2[q]) continue;
      bool ok = true;
      for (std::size_t a = 0; a < i && ok; ++a)
        if (val1(a, i) != val2(img[a], q) || val1(i, a) != val2(q, img[a]))
          ok = false;
      if (!ok) continue;
      img[i] = q;
      used[q] = true;
      self(self, i + 1);
      used[q] = false;
    }
  };
  rec(rec, 0);
  return found;
}

struct EncodingFailure {
  std::size_t set_p, set_q;               // corpus positions
  std::vector<std::size_t> bijection;
  std::array<std::size_t, 3> triple;      // sorted triple of set_p
};

struct EncodingReport {
  std::size_t pairs_checked = 0;
  std::size_t isomorphisms_checked = 0;
  std::vector<EncodingFailure> failures;
};

// For every ordered corpus pair and every table isomorphism between their
// encodings, checks that the bijection preserves all triple orientations.
inline EncodingReport verify_encoding(
    const std::vector<PointSet>& corpus,
    const std::function<PredicateTable(const PointSet&)>& encoder,
    std::size_t size_cap = 8) {
  EncodingReport rep;
  std::vector<PredicateTable> tables;
  tables.reserve(corpus.size());
  for (const auto& P : corpus) tables.push_back(encoder(P));

  for (std::size_t s = 0; s < corpus.size(); ++s)
    for (std::size_t t = 0; t < corpus.size(); ++t) {
      ++rep.pairs_checked;
      const PointSet& P = corpus[s];
      const PointSet& Q = corpus[t];
      for (const auto& f : gamma_isomorphisms(tables[s], tables[t], size_cap)) {
        ++rep.isomorphisms_checked;
        const std::size_t n = P.size();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
              if (P.triple(i, j, k) !=
                  orient(Q[f[i]], Q[f[j]], Q[f[k]]))
                rep.failures.push_back(EncodingFailure{s, t, f, {i, j, k}});
      }
    }
  return rep;
}

}  // namespace otk
