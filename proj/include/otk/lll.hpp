#pragma once

// Collision-free pair functions via resampling.  A collision is a pair of
// distinct labeled 3-subsets on which a function attains the same six
// ordered-pair values; collision-free functions induce locally consistent
// predicate tables, and rigid pairwise non-equivalent ones encode order
// types across a catalog.  The sufficient codomain size comes from the
// local lemma: k^6 >= 288 e^2 n^4 and k^4 >= 288 e^2 n^2, certified here
// with exact rational bounds on e (no floating point).

#include <functional>
#include <map>

#include "otk/local_consistency.hpp"
#include "otk/pair_function.hpp"
#include "otk/rng.hpp"

namespace otk {

struct CollisionEvent {
  std::array<std::size_t, 3> tripleA, tripleB;
  int type;  // 1 when the subsets share <= 1 element, 2 when they share 2
};

namespace detail {

inline int collision_type(const std::array<std::size_t, 3>& a,
                          const std::array<std::size_t, 3>& b) {
  std::size_t common = 0;
  for (std::size_t x : a)
    for (std::size_t y : b)
      if (x == y) ++common;
  return common == 2 ? 2 : 1;
}

}  // namespace detail

// First (by sorted subset pair, then by relabeling of the second subset)
// collision of f, or none.  Both triples are labeled; relabeling both
// simultaneously is a symmetry, so the first is scanned in sorted order.
inline std::optional<CollisionEvent> has_collision(const PairFunction& f) {
  const std::size_t n = f.size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

  auto match = [&](const std::array<std::size_t, 3>& a,
                   const std::array<std::size_t, 3>& b) {
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s)
        if (r != s && f.value(a[r], a[s]) != f.value(b[r], b[s]))
          return false;
    return true;
  };

  for (std::size_t ta = 0; ta < triples.size(); ++ta)
    for (std::size_t tb = ta + 1; tb < triples.size(); ++tb)
      for (const auto& perm : detail::kPerm3) {
        const auto& A = triples[ta];
        const std::array<std::size_t, 3> B = {triples[tb][perm[0]],
                                              triples[tb][perm[1]],
                                              triples[tb][perm[2]]};
        if (match(A, B))
          return CollisionEvent{A, B, detail::collision_type(A, B)};
      }
  return std::nullopt;
}

namespace detail {

inline BigInt ipow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e--) r *= base;
  return r;
}

// Rational bounds lo <= e <= hi from the factorial series: the tail after
// 1/25! is below 2/26!.
inline std::pair<Rational, Rational> euler_bounds() {
  Rational lo = 0;
  BigInt fact = 1;
  for (unsigned j = 0; j <= 25; ++j) {
    if (j > 0) fact *= j;
    lo += Rational(BigInt(1), fact);
  }
  const Rational hi = lo + Rational(BigInt(2), fact * 26);
  return {lo, hi};
}

// Decides k^p >= 288 e^2 n^q exactly; the interval on e^2 never straddles
// the rational left side (e^2 is irrational), but refuse to guess if the
// series bounds were ever too loose.
inline bool threshold_condition(std::size_t k, unsigned p, std::size_t n,
                                unsigned q) {
  static const auto eb = euler_bounds();
  const Rational lhs(ipow(BigInt(k), p));
  const Rational lo = 288 * eb.first * eb.first * Rational(ipow(BigInt(n), q));
  const Rational hi = 288 * eb.second * eb.second *
                      Rational(ipow(BigInt(n), q));
  if (lhs >= hi) return true;
  if (lhs < lo) return false;
  fail(errc::invalid_argument, "threshold certification: bounds too loose");
}

}  // namespace detail

struct LLLParameters {
  std::size_t n, k;
  Rational p_type1;        // exact collision probability, type 1
  Rational p_type2_bound;  // upper bound, type 2
  BigInt d1, d2;           // dependency-degree bounds by type
  Rational x1, x2;         // local-lemma weights
  BigInt e1_bound, e2_bound;  // event-count bounds by type

  LLLParameters(std::size_t n_, std::size_t k_) : n(n_), k(k_) {
    using detail::ipow;
    if (n < 3 || k == 0)
      fail(errc::invalid_argument, "lll parameters: need n >= 3, k >= 1");
    p_type1 = Rational(BigInt(1), ipow(BigInt(k), 6));
    p_type2_bound = Rational(BigInt(1), ipow(BigInt(k), 4));
    d1 = 72 * ipow(BigInt(n), 4);
    d2 = 72 * ipow(BigInt(n), 2);
    x1 = Rational(BigInt(1), d1);
    x2 = Rational(BigInt(1), d2);
    e1_bound = ipow(BigInt(n), 6);
    e2_bound = 18 * ipow(BigInt(n), 4);
  }
};

// Smallest k making both local-lemma conditions hold.
inline std::size_t lll_threshold(std::size_t n) {
  if (n < 4)
    fail(errc::precondition_violated, "lll threshold: need n >= 4", {n});
  for (std::size_t k = 1;; ++k)
    if (detail::threshold_condition(k, 6, n, 4) &&
        detail::threshold_condition(k, 4, n, 2))
      return k;
}

struct SampleResult {
  PairFunction f;
  std::size_t resamples = 0;
};

// Uniform start, then resample all ordered pairs touched by the first
// collision until none remains.  Deterministic for a given seed.
inline SampleResult moser_tardos_sample(std::size_t n, std::size_t k,
                                        std::uint64_t seed,
                                        std::size_t max_resamples = 200000) {
  if (n < 3) fail(errc::invalid_argument, "sampling: need n >= 3");
  std::mt19937_64 g(seed);
  PairFunction f(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) f.set_value(i, j, uniform_below(g, k));

  SampleResult res{std::move(f), 0};
  while (auto ev = has_collision(res.f)) {
    if (res.resamples >= max_resamples)
      fail(errc::resample_budget, "sampling: resample budget exhausted",
           {max_resamples});
    ++res.resamples;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& t : {ev->tripleA, ev->tripleB})
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s)
          if (r != s) pairs.emplace_back(t[r], t[s]);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& [i, j] : pairs)
      res.f.set_value(i, j, uniform_below(g, k));
  }
  return res;
}

// Relabeling permutation pi with f1(i,j) = f2(pi(i),pi(j)), or none.
// excluding_identity turns the search into an automorphism-freeness probe.
inline std::optional<std::vector<std::size_t>> are_equivalent(
    const PairFunction& f1, const PairFunction& f2,
    bool excluding_identity = false) {
  if (f1.size() != f2.size() || f1.range() != f2.range())
    fail(errc::size_mismatch, "equivalence: shape mismatch",
         {f1.size(), f2.size()});
  const std::size_t n = f1.size();
  if (n > 9)
    fail(errc::size_limit, "equivalence: supported up to 9 points", {n, 9});

  auto profile = [&](const PairFunction& f, std::size_t i) {
    std::vector<std::pair<std::size_t, std::size_t>> prof;
    for (std::size_t q = 0; q < n; ++q)
      if (q != i) prof.emplace_back(f.value(i, q), f.value(q, i));
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> prof1(n),
      prof2(n);
  for (std::size_t i = 0; i < n; ++i) {
    prof1[i] = profile(f1, i);
    prof2[i] = profile(f2, i);
  }

  std::vector<std::size_t> img(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i, bool identity) -> bool {
    if (i == n) return !(excluding_identity && identity);
    for (std::size_t q = 0; q < n; ++q) {
      if (used[q] || prof1[i] != prof2[q]) continue;
      bool ok = true;
      for (std::size_t a = 0; a < i && ok; ++a)
        if (f1.value(a, i) != f2.value(img[a], q) ||
            f1.value(i, a) != f2.value(q, img[a]))
          ok = false;
      if (!ok) continue;
      img[i] = q;
      used[q] = true;
      if (self(self, i + 1, identity && q == i)) return true;
      used[q] = false;
    }
    return false;
  };
  if (rec(rec, 0, true)) return img;
  return std::nullopt;
}

inline bool is_rigid(const PairFunction& f) {
  if (f.size() < 2) return true;
  return !are_equivalent(f, f, /*excluding_identity=*/true);
}

// Predicate table induced by a pair function under the x-order labeling.
inline PredicateTable table_from_pair_function(const PairFunction& f) {
  std::vector<std::string> labels;
  for (std::size_t v = 1; v <= f.range(); ++v)
    labels.push_back(std::to_string(v));
  PredicateTable T(f.size(), labels);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (i != j) T.set_value(i, j, f.value(i, j));
  return T;
}

// One collision-free, pairwise non-equivalent pair function per catalog
// member (the catalog must already be deduplicated by order type).  The
// induced tables are re-verified: local consistency on every member and a
// zero-failure encoding check across the catalog.
inline std::map<std::size_t, PairFunction> synthesize_predicate(
    const std::vector<PointSet>& catalog, std::size_t k, std::uint64_t seed,
    std::size_t max_resamples = 200000, std::size_t max_attempts = 64) {
  if (catalog.empty())
    fail(errc::invalid_argument, "synthesis: empty catalog");
  const std::size_t n = catalog.front().size();
  for (const auto& P : catalog)
    if (P.size() != n)
      fail(errc::size_mismatch, "synthesis: catalog sizes differ",
           {P.size(), n});
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i + 1; j < catalog.size(); ++j)
      if (same_order_type(catalog[i], catalog[j]))
        fail(errc::precondition_violated,
             "synthesis: catalog members share an order type", {i + 1, j + 1});

  std::map<std::size_t, PairFunction> out;
  for (std::size_t cls = 0; cls < catalog.size(); ++cls) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < max_attempts && !accepted;
         ++attempt) {
      auto sample = moser_tardos_sample(
          n, k, derive_seed(seed, cls * max_attempts + attempt),
          max_resamples);
      bool fresh = true;
      for (const auto& [_, g] : out)
        if (are_equivalent(sample.f, g)) fresh = false;
      if (!fresh) continue;
      out.emplace(cls, std::move(sample.f));
      accepted = true;
    }
    if (!accepted)
      fail(errc::duplicate_exhaustion,
           "synthesis: no fresh function found within attempt budget",
           {cls + 1, max_attempts});
  }

  for (std::size_t cls = 0; cls < catalog.size(); ++cls) {
    if (has_collision(out.at(cls)))
      fail(errc::invalid_argument, "synthesis: sampled function collides");
    if (is_locally_consistent(catalog[cls], table_from_pair_function(out.at(cls))))
      fail(errc::invalid_argument, "synthesis: induced table inconsistent");
  }
  const auto report = verify_encoding(
      catalog,
      [&](const PointSet& P) {
        for (std::size_t cls = 0; cls < catalog.size(); ++cls)
          if (&catalog[cls] == &P)
            return table_from_pair_function(out.at(cls));
        fail(errc::invalid_argument, "synthesis: encoder got a foreign set");
      },
      /*size_cap=*/9);
  if (!report.failures.empty())
    fail(errc::invalid_argument, "synthesis: encoding check failed");
  return out;
}

}  // namespace otk
