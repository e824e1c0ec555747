#include <catch2/catch_amalgamated.hpp>

#include "otk/arrows.hpp"
#include "otk/builders.hpp"
#include "otk/corpus.hpp"
#include "otk/split.hpp"

using namespace otk;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

PointSet two_points() { return validate({pt(0, 0), pt(1, 1)}); }

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("product copies the second factor around each point of the first",
          "[builders]") {
  const PointSet A = make_cup(3), B = make_cap(3);
  const PointSet R = product(A, B);
  REQUIRE(R.size() == 9);

  // each contiguous block of |B| points is a signature copy of B
  for (std::size_t a = 0; a < 3; ++a)
    CHECK(same_signature(subset(R, range(3 * a, 3 * a + 3)), B));

  // every transversal through distinct blocks is a signature copy of A
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l)
        CHECK(same_signature(subset(R, {i, 3 + j, 6 + l}), A));
}

TEST_CASE("product budget and argument errors", "[builders]") {
  try {
    product(make_cup(3), make_cap(3), BuildBudget{5, 6});
    FAIL("expected budget failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::budget_exceeded);
  }
  try {
    product(PointSet{}, make_cup(3));
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}

TEST_CASE("sequence_product folds left", "[builders]") {
  const PointSet R =
      sequence_product({make_cup(2), make_cap(3), make_cup(2)});
  CHECK(R.size() == 12);
  const PointSet direct = product(product(make_cup(2), make_cap(3)),
                                  make_cup(2));
  CHECK(same_signature(R, direct));

  try {
    sequence_product({});
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}

TEST_CASE("stack_splitting produces a splitting cut preserving signatures",
          "[builders]") {
  const PointSet S1 = make_random_grid(4, 301), S2 = make_random_grid(3, 302);
  const StackResult st = stack_splitting(S1, S2);
  REQUIRE(st.set.size() == 7);
  CHECK(st.cut == 4);
  CHECK(is_splitting(st.set, st.cut));
  CHECK(same_signature(subset(st.set, range(0, 4)), S1));
  CHECK(same_signature(subset(st.set, range(4, 7)), S2));
  CHECK(deep_below(subset(st.set, range(0, 4)), subset(st.set, range(4, 7))));
}

TEST_CASE("amplifier on a two-point and one-point part", "[builders]") {
  const PointSet one = validate({pt(0, 0)});
  const AmplifierResult R = bipartite_amplifier(two_points(), one, 2);
  REQUIRE(R.set.size() == 5);  // |S1|^2 = 4 on the left, the singleton right
  CHECK(R.cut == 4);
  CHECK(is_splitting(R.set, R.cut));

  // the defining property: any 2-coloring of cross pairs leaves a copy of
  // (S1, S2) across the cut whose cross pairs are monochromatic
  const CrossArrowResult v =
      verify_cross_arrow(R.set, R.cut, two_points(), one, 2);
  CHECK(v.holds);
  CHECK(v.colorings_checked == 16);  // 4 cross pairs, 2 colors
}

TEST_CASE("amplifier refuses explosive sizes before building", "[builders]") {
  // k^(|S1|^k) copies of a two-point set overflow any sane budget
  try {
    bipartite_amplifier(two_points(), two_points(), 2);
    FAIL("expected budget failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::budget_exceeded);
  }
  try {
    bipartite_amplifier(two_points(), two_points(), 0);
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
  try {
    bipartite_amplifier(PointSet{}, two_points(), 2);
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}

TEST_CASE("ramsey_build base cases", "[builders]") {
  // one color class: the target itself suffices
  const PointSet R1 = ramsey_build({make_cup(4)});
  CHECK(same_signature(R1, make_cup(4)));

  // a single-point target is hit by any nonempty set
  const PointSet R2 = ramsey_build({make_cup(3), validate({pt(0, 0)})});
  CHECK(R2.size() == 1);

  const PairArrowResult v =
      verify_pair_arrow(R2, validate({pt(0, 0)}), 2, MatchMode::signature);
  CHECK(v.holds);
}

TEST_CASE("ramsey_build rejections", "[builders]") {
  const PointSet bad4 = validate({pt(0, 0), pt(1, 3), pt(2, 1), pt(3, 2)});
  try {
    ramsey_build({make_cup(3), bad4});
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code == errc::not_decomposable);
    REQUIRE(e.where.size() == 1);
    CHECK(e.where[0] == 2);  // 1-based index of the offending target
  }

  // two two-point targets with two colors already need an amplifier whose
  // second factor explodes past the default budget
  try {
    ramsey_build({two_points(), two_points()});
    FAIL("expected budget failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::budget_exceeded);
  }

  try {
    ramsey_build({});
    FAIL("expected argument failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}
