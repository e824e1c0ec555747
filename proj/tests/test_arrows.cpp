#include <catch2/catch_amalgamated.hpp>

#include "otk/arrows.hpp"
#include "otk/builders.hpp"
#include "otk/corpus.hpp"
#include "otk/rng.hpp"
#include "otk/split.hpp"

using namespace otk;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

std::vector<std::size_t> full_pool(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("signature copy enumeration", "[arrows]") {
  const PointSet cup5 = make_cup(5);

  // lexicographically first cup3 copy in a cup is the prefix
  const auto hit = find_signature_copy(cup5, full_pool(5), make_cup(3));
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<std::size_t>{0, 1, 2});

  // no cap copies inside a cup
  CHECK_FALSE(find_signature_copy(cup5, full_pool(5), make_cap(3)));

  // two-point targets carry no orientation constraint: every pair matches
  std::size_t count = 0;
  for_each_signature_copy(cup5, full_pool(5), make_cup(2),
                          [&](const std::vector<std::size_t>&) {
                            ++count;
                            return false;
                          });
  CHECK(count == 10);

  // pool restriction respected
  count = 0;
  for_each_signature_copy(cup5, {1, 3, 4}, make_cup(3),
                          [&](const std::vector<std::size_t>& s) {
                            ++count;
                            CHECK(s == std::vector<std::size_t>{1, 3, 4});
                            return false;
                          });
  CHECK(count == 1);

  // visitor returning true stops the walk
  count = 0;
  const bool stopped = for_each_signature_copy(
      cup5, full_pool(5), make_cup(3), [&](const std::vector<std::size_t>&) {
        ++count;
        return true;
      });
  CHECK(stopped);
  CHECK(count == 1);
}

TEST_CASE("pair arrow: convex hexagon forces a monochromatic triangle",
          "[arrows]") {
  const PairArrowResult r = verify_pair_arrow(make_convex(6), make_cup(3), 2,
                                              MatchMode::ordertype);
  CHECK(r.holds);
  CHECK(r.colorings_checked == 32768);  // 2^15: all colorings of 15 pairs
  CHECK_FALSE(r.counterexample.has_value());
}

TEST_CASE("pair arrow: a bare triangle does not arrow itself", "[arrows]") {
  const PairArrowResult r = verify_pair_arrow(make_cup(3), make_cup(3), 2,
                                              MatchMode::signature);
  CHECK_FALSE(r.holds);
  CHECK(r.colorings_checked == 2);
  REQUIRE(r.counterexample.has_value());
  // pair ranks (0,1),(0,2),(1,2): splitting off the last pair breaks it
  CHECK(r.counterexample->flat(0) == 0);
  CHECK(r.counterexample->flat(1) == 0);
  CHECK(r.counterexample->flat(2) == 1);
}

TEST_CASE("pair arrow: two-point targets always land", "[arrows]") {
  const PointSet two = validate({pt(0, 0), pt(1, 1)});
  const PairArrowResult r =
      verify_pair_arrow(two, two, 2, MatchMode::signature);
  CHECK(r.holds);
  CHECK(r.colorings_checked == 2);
}

TEST_CASE("pair arrow guards", "[arrows]") {
  try {
    verify_pair_arrow(make_cup(3), make_cup(3), 0, MatchMode::signature);
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
  try {
    verify_pair_arrow(make_convex(6), make_cup(3), 2, MatchMode::ordertype,
                      VerifyStrategy::all(), 16);
    FAIL("expected enumeration budget failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::enumeration_budget);
  }
}

TEST_CASE("pair arrow: sampling is deterministic per seed", "[arrows]") {
  const PointSet P = make_convex(6);
  const auto a = verify_pair_arrow(P, make_cup(3), 2, MatchMode::ordertype,
                                   VerifyStrategy::sampled(99, 50));
  const auto b = verify_pair_arrow(P, make_cup(3), 2, MatchMode::ordertype,
                                   VerifyStrategy::sampled(99, 50));
  CHECK(a.holds == b.holds);
  CHECK(a.colorings_checked == b.colorings_checked);
  CHECK(a.colorings_checked == 50);
}

TEST_CASE("point arrow on products of two-point sets", "[arrows]") {
  const PointSet up = validate({pt(0, 0), pt(1, 1)});
  const PointSet down = validate({pt(0, 0), pt(1, -1)});
  for (const PointSet& A : {up, down})
    for (const PointSet& B : {up, down}) {
      const PointSet R = sequence_product({A, B});
      const PointArrowResult r = verify_point_arrow(R, {A, B});
      CHECK(r.holds);
      CHECK(r.colorings_checked == 16);  // 2^4 point colorings
    }
}

TEST_CASE("point arrow with one color class", "[arrows]") {
  // k = 1: the whole set must contain the target
  CHECK(verify_point_arrow(make_cup(4), {make_cup(3)}).holds);
  CHECK_FALSE(verify_point_arrow(make_cup(4), {make_cap(3)}).holds);
  // under order-type matching a cap is a relabeled cup
  CHECK(verify_point_arrow(make_cup(4), {make_cap(3)}, MatchMode::ordertype)
            .holds);
}

TEST_CASE("cross arrow positive and negative cases", "[arrows]") {
  const PointSet two = validate({pt(0, 0), pt(1, 1)});
  const PointSet one = validate({pt(2, 0)});

  // amplifier output passes (re-checked independently in the builder tests)
  const AmplifierResult amp = bipartite_amplifier(two, one, 2);
  const CrossArrowResult good =
      verify_cross_arrow(amp.set, amp.cut, two, one, 2);
  CHECK(good.holds);

  // a bare stack of the parts is too small: color its two cross pairs apart
  const StackResult st = stack_splitting(two, one);
  const CrossArrowResult badr = verify_cross_arrow(st.set, st.cut, two, one, 2);
  CHECK_FALSE(badr.holds);
  CHECK(badr.counterexample.has_value());

  try {
    verify_cross_arrow(st.set, 0, two, one, 2);
    FAIL("expected cut failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::bad_cut);
  }
  try {
    verify_cross_arrow(st.set, 3, two, one, 2);
    FAIL("expected cut failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::bad_cut);
  }
}

TEST_CASE("adversary coloring by middle orientation", "[arrows]") {
  const PointSet cup5 = make_cup(5);
  const TupleColoring all_up = adversary_coloring(cup5, 3, 1);
  CHECK(all_up.n == 5);
  CHECK(all_up.p == 3);
  CHECK(all_up.k == 2);
  REQUIRE(all_up.color.size() == 10);
  for (const auto& [t, c] : all_up.color) CHECK(c == 1);

  // a set with both turn directions gets both colors
  const PointSet quad = validate({pt(0, 0), pt(1, 3), pt(2, 1), pt(3, 0)});
  const TupleColoring mixed = adversary_coloring(quad, 3, 1);
  bool saw0 = false, saw1 = false;
  for (const auto& [t, c] : mixed.color) (c ? saw1 : saw0) = true;
  CHECK(saw0);
  CHECK(saw1);
  CHECK(mixed.color.at({0, 1, 2}) == 0);  // clockwise middle turn
  CHECK(mixed.color.at({1, 2, 3}) == 1);  // counterclockwise middle turn

  for (auto [p, i] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 1}, {6, 1}, {3, 0}, {3, 2}}) {
    try {
      adversary_coloring(cup5, p, i);
      FAIL("expected index failure");
    } catch (const Error& e) {
      CHECK(e.code == errc::bad_index);
    }
  }
}

TEST_CASE("monochromatic tuples under the adversary stay convex",
          "[arrows][property]") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 4 + s % 4;  // 4..7
    const PointSet P = make_random_grid(n, derive_seed(53, s));
    const TupleColoring col = adversary_coloring(P, 3, 1);

    // every subset of >3 points whose triples share one color is convex
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) sub.push_back(i);
      if (sub.size() <= 3) continue;
      bool mono = true;
      std::optional<std::uint8_t> c0;
      std::vector<std::size_t> tri(3);
      for (std::size_t a = 0; a < sub.size() && mono; ++a)
        for (std::size_t b = a + 1; b < sub.size() && mono; ++b)
          for (std::size_t c = b + 1; c < sub.size() && mono; ++c) {
            tri = {sub[a], sub[b], sub[c]};
            const std::uint8_t cc = col.color.at(tri);
            if (!c0) c0 = cc;
            if (*c0 != cc) mono = false;
          }
      if (!mono) continue;
      const PointSet S = subset(P, sub);
      CHECK(extreme_points(S).size() == S.size());
    }
  }
}
