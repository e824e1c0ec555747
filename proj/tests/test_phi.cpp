#include <catch2/catch_amalgamated.hpp>

#include "otk/corpus.hpp"
#include "otk/local_consistency.hpp"
#include "otk/phi.hpp"
#include "otk/rng.hpp"

using namespace otk;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

// triangle + interior point; center is index 2 = (2,1)
const PointSet& wheel4() {
  static const PointSet P =
      validate({pt(0, 0), pt(1, 3), pt(2, 1), pt(4, 0)});
  return P;
}

std::vector<PointSet> wheel_corpus() {
  std::vector<PointSet> out;
  for (std::size_t n = 4; n <= 7; ++n) {
    out.push_back(make_wheel(n));
    out.push_back(make_convex(n));
    for (std::uint64_t s = 0; s < 4; ++s)
      out.push_back(make_random_wheel(n, derive_seed(31, n * 8 + s)));
  }
  return out;
}

}  // namespace

TEST_CASE("wheel_center picks the interior point or the leftmost",
          "[phi]") {
  CHECK(wheel_center(wheel4()) == 2);
  CHECK(wheel_center(make_convex(5)) == 0);
  CHECK(wheel_center(validate({pt(1, 2)})) == 0);

  // two interior points disqualify the set
  const PointSet two_inner =
      validate({pt(0, 0), pt(1, 4), pt(2, 2), pt(3, 1), pt(4, 1)});
  REQUIRE(interior_points(two_inner).size() == 2);
  try {
    wheel_center(two_inner);
    FAIL("expected wheel-shape failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::not_a_wheel_set);
  }
  try {
    wheel_center(validate({}));
    FAIL("expected failure on the empty set");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}

TEST_CASE("phi values on the worked example", "[phi]") {
  const PredicateTable T = phi_encode(wheel4());
  REQUIRE(T.codomain() == std::vector<std::string>{"-1", "+1"});
  CHECK(phi_value(T, 2, 0) == -1);  // first argument is the center
  CHECK(phi_value(T, 0, 2) == +1);  // second argument is the center
  CHECK(phi_value(T, 0, 3) == +1);  // otherwise the turn towards the center
  CHECK(phi_value(T, 3, 0) == -1);
}

TEST_CASE("phi is antisymmetric on every ordered pair", "[phi][property]") {
  for (const PointSet& W : wheel_corpus()) {
    const PredicateTable T = phi_encode(W);
    for (std::size_t p = 0; p < W.size(); ++p)
      for (std::size_t q = p + 1; q < W.size(); ++q)
        CHECK(phi_value(T, p, q) == -phi_value(T, q, p));
  }
}

TEST_CASE("phi determines every triple orientation by the sum rule",
          "[phi][property]") {
  for (const PointSet& W : wheel_corpus()) {
    const PredicateTable T = phi_encode(W);
    for (std::size_t i = 0; i < W.size(); ++i)
      for (std::size_t j = i + 1; j < W.size(); ++j)
        for (std::size_t k = j + 1; k < W.size(); ++k) {
          const int sum = phi_value(T, i, j) + phi_value(T, j, k) +
                          phi_value(T, k, i);
          CHECK((sum >= 1) ==
                (W.triple(i, j, k) == Orientation::counterclockwise));
        }
  }
}

TEST_CASE("phi tables are locally consistent on wheel sets",
          "[phi][property]") {
  for (const PointSet& W : wheel_corpus())
    CHECK_FALSE(is_locally_consistent(W, phi_encode(W)).has_value());
}

TEST_CASE("phi encodings agree across sets of equal order type", "[phi]") {
  std::vector<PointSet> corpus{wheel4(),        make_wheel(5),
                               make_wheel(6),   make_wheel(7),
                               make_convex(4),  make_convex(5),
                               make_convex(6),  make_random_wheel(5, 71),
                               make_random_wheel(6, 72)};
  const auto report = verify_encoding(
      corpus, [](const PointSet& P) { return phi_encode(P); });
  CHECK(report.pairs_checked == corpus.size() * corpus.size());
  CHECK(report.isomorphisms_checked >= corpus.size());
  CHECK(report.failures.empty());
}
