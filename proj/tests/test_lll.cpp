#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "otk/corpus.hpp"
#include "otk/lll.hpp"
#include "otk/local_consistency.hpp"

using namespace otk;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

// 10^-9-wide rational bracket of e, independent of the series bounds used
// inside the library
const Rational e_lo(BigInt(2718281828), BigInt(1000000000));
const Rational e_hi(BigInt(2718281829), BigInt(1000000000));

Rational rpow(Rational b, unsigned e) {
  Rational r(1);
  while (e--) r *= b;
  return r;
}

bool certified_at(std::size_t k, std::size_t n) {
  // sufficient: both conditions hold even against the upper bracket of e
  return rpow(Rational(k), 6) >= 288 * e_hi * e_hi * rpow(Rational(n), 4) &&
         rpow(Rational(k), 4) >= 288 * e_hi * e_hi * rpow(Rational(n), 2);
}

bool certified_below(std::size_t k, std::size_t n) {
  // necessary direction: some condition fails even against the lower bracket
  return rpow(Rational(k), 6) < 288 * e_lo * e_lo * rpow(Rational(n), 4) ||
         rpow(Rational(k), 4) < 288 * e_lo * e_lo * rpow(Rational(n), 2);
}

PairFunction constant_function(std::size_t n, std::size_t k) {
  return PairFunction(n, k);  // all values default to 0
}

}  // namespace

TEST_CASE("collision detection on small functions", "[lll]") {
  CHECK(detail::collision_type({0, 1, 2}, {3, 4, 5}) == 1);
  CHECK(detail::collision_type({0, 1, 2}, {2, 3, 4}) == 1);
  CHECK(detail::collision_type({0, 1, 2}, {1, 2, 3}) == 2);

  // three points carry a single 3-subset: nothing to collide
  CHECK_FALSE(has_collision(constant_function(3, 1)).has_value());

  // a constant function on four points collides immediately
  const auto ev = has_collision(constant_function(4, 1));
  REQUIRE(ev.has_value());
  CHECK(ev->tripleA == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(ev->tripleB == std::array<std::size_t, 3>{0, 1, 3});
  CHECK(ev->type == 2);
}

TEST_CASE("local-lemma parameters are exact", "[lll]") {
  const LLLParameters p(8, 20);
  CHECK(p.p_type1 == Rational(BigInt(1), BigInt(64000000)));
  CHECK(p.p_type2_bound == Rational(BigInt(1), BigInt(160000)));
  CHECK(p.d1 == BigInt(294912));
  CHECK(p.d2 == BigInt(4608));
  CHECK(p.x1 == Rational(BigInt(1), BigInt(294912)));
  CHECK(p.x2 == Rational(BigInt(1), BigInt(4608)));
  CHECK(p.e1_bound == BigInt(262144));
  CHECK(p.e2_bound == BigInt(73728));

  try {
    LLLParameters(2, 20);
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}

TEST_CASE("codomain thresholds", "[lll]") {
  const std::size_t expect[] = {14, 16, 17, 18, 20, 21, 22, 23, 24};
  for (std::size_t n = 4; n <= 12; ++n) {
    const std::size_t k = lll_threshold(n);
    CHECK(k == expect[n - 4]);
    // re-certify with an independent bracket of e
    CHECK(certified_at(k, n));
    CHECK(certified_below(k - 1, n));
    if (n > 4) CHECK(k >= lll_threshold(n - 1));
  }
  try {
    lll_threshold(3);
    FAIL("expected precondition failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::precondition_violated);
  }
}

TEST_CASE("resampling is deterministic and terminates at the threshold",
          "[lll]") {
  const SampleResult a = moser_tardos_sample(5, 14, 1234);
  const SampleResult b = moser_tardos_sample(5, 14, 1234);
  CHECK(a.f == b.f);
  CHECK(a.resamples == b.resamples);
  CHECK(moser_tardos_sample(5, 14, 1235).f != a.f);

  // nothing to resample on three points
  CHECK(moser_tardos_sample(3, 1, 7).resamples == 0);

  for (std::size_t n = 4; n <= 8; ++n)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SampleResult r = moser_tardos_sample(n, lll_threshold(n), seed);
      CHECK(r.f.size() == n);
      CHECK_FALSE(has_collision(r.f).has_value());
    }

  // a single value can never avoid collisions on six points
  try {
    moser_tardos_sample(6, 1, 3, 50);
    FAIL("expected resample budget failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::resample_budget);
  }
}

TEST_CASE("type-1 collision frequency matches its exact probability",
          "[lll][property]") {
  // disjoint labeled triples on six points with k = 2: collision chance
  // is exactly 2^-6; count over 10^4 uniform functions, allow 3 sigma
  std::mt19937_64 g(424242);
  const std::array<std::size_t, 3> A{0, 1, 2}, B{3, 4, 5};
  std::size_t hits = 0;
  const std::size_t N = 10000;
  for (std::size_t it = 0; it < N; ++it) {
    PairFunction f(6, 2);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (i != j) f.set_value(i, j, uniform_below(g, 2));
    bool match = true;
    for (std::size_t r = 0; r < 3 && match; ++r)
      for (std::size_t s = 0; s < 3 && match; ++s)
        if (r != s && f.value(A[r], A[s]) != f.value(B[r], B[s])) match = false;
    if (match) ++hits;
  }
  // mean 156.25, sigma ~12.4: [119, 194]
  CHECK(hits >= 119);
  CHECK(hits <= 194);
}

TEST_CASE("relabeling equivalence", "[lll]") {
  const PairFunction f = moser_tardos_sample(5, 14, 99).f;

  // against itself the lexicographically least witness is the identity
  const auto self = are_equivalent(f, f);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<std::size_t>{0, 1, 2, 3, 4});

  // scramble through a known permutation and recover some witness
  const std::vector<std::size_t> pi{2, 0, 4, 1, 3};
  PairFunction f2(5, 14);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) f2.set_value(pi[i], pi[j], f.value(i, j));
  const auto w = are_equivalent(f, f2);
  REQUIRE(w.has_value());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(f.value(i, j) == f2.value((*w)[i], (*w)[j]));

  // constant functions admit every relabeling; rigid ones only the identity
  CHECK_FALSE(is_rigid(constant_function(4, 3)));
  const auto nonid =
      are_equivalent(constant_function(4, 3), constant_function(4, 3),
                     /*excluding_identity=*/true);
  REQUIRE(nonid.has_value());
  CHECK(*nonid != std::vector<std::size_t>{0, 1, 2, 3});

  try {
    are_equivalent(PairFunction(4, 2), PairFunction(5, 2));
    FAIL("expected shape failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::size_mismatch);
  }
  try {
    are_equivalent(PairFunction(4, 2), PairFunction(4, 3));
    FAIL("expected shape failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::size_mismatch);
  }
  try {
    are_equivalent(PairFunction(10, 2), PairFunction(10, 2));
    FAIL("expected size failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::size_limit);
  }
}

TEST_CASE("tables induced by pair functions", "[lll]") {
  PairFunction f(3, 2);
  f.set_value(0, 1, 1);
  const PredicateTable T = table_from_pair_function(f);
  CHECK(T.size() == 3);
  CHECK(T.codomain() == std::vector<std::string>{"1", "2"});
  CHECK(T.label(T.value(0, 1)) == "2");
  CHECK(T.label(T.value(1, 0)) == "1");
}

TEST_CASE("synthesis over a two-set catalog", "[lll]") {
  const PointSet quad = validate({pt(0, 0), pt(1, 3), pt(2, 1), pt(3, 0)});
  const std::vector<PointSet> catalog{make_cup(4), quad};
  const auto out = synthesize_predicate(catalog, 20, 1);
  REQUIRE(out.size() == 2);

  for (const auto& [idx, f] : out) {
    CHECK(f.size() == 4);
    CHECK_FALSE(has_collision(f).has_value());
    CHECK(is_rigid(f));
    CHECK_FALSE(
        is_locally_consistent(catalog[idx], table_from_pair_function(f))
            .has_value());
  }
  CHECK_FALSE(are_equivalent(out.at(0), out.at(1)).has_value());

  // the induced encoding distinguishes the catalog across relabelings
  const EncodingReport rep = verify_encoding(
      catalog, [&](const PointSet& P) {
        for (const auto& [idx, f] : out)
          if (same_signature(P, catalog[idx]))
            return table_from_pair_function(f);
        fail(errc::invalid_argument, "unknown catalog member");
      });
  CHECK(rep.pairs_checked == 4);
  CHECK(rep.failures.empty());

  try {
    synthesize_predicate({make_cup(4), make_cap(4)}, 20, 1);
    FAIL("expected precondition failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::precondition_violated);
  }
  try {
    synthesize_predicate({make_cup(4), make_cup(5)}, 20, 1);
    FAIL("expected shape failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::size_mismatch);
  }
  try {
    synthesize_predicate({}, 20, 1);
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}
