#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "otk/corpus.hpp"
#include "otk/geometry.hpp"
#include "otk/split.hpp"
#include "otk/point_io.hpp"
#include "otk/point_set.hpp"
#include "otk/rational.hpp"
#include "otk/rng.hpp"

using namespace otk;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("rational parsing covers the three literal forms", "[rational]") {
  CHECK(parse_rational("42") == Rational(42));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("2.") == Rational(2));

  for (const char* bad : {"", "x", "1/0", "1//2", "1.2.3", "--1", "1/", "/2"}) {
    try {
      parse_rational(bad);
      FAIL("expected parse error for '" << bad << "'");
    } catch (const Error& e) {
      CHECK(e.code == errc::parse_error);
    }
  }
}

TEST_CASE("rational values stay canonical and format round-trips", "[rational]") {
  const Rational r = parse_rational("-10/15");
  CHECK(rat_num(r) == -2);
  CHECK(rat_den(r) == 3);
  CHECK(format_rational(r) == "-2/3");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(parse_rational(format_rational(Rational(22, 7))) == Rational(22, 7));
}

TEST_CASE("orient reports the exact turn direction", "[geometry]") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::counterclockwise);
  CHECK(orient(pt(0, 0), pt(1, 0), pt(2, -1)) == Orientation::clockwise);
  CHECK(orient(pt(0, 0), pt(2, 1), pt(4, 3)) == Orientation::counterclockwise);

  try {
    orient(pt(0, 0), pt(1, 1), pt(2, 2));
    FAIL("expected collinear failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::collinear_triple);
  }
  try {
    orient(pt(0, 0), pt(0, 0), pt(2, 2));
    FAIL("expected duplicate failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::duplicate_point);
  }
}

TEST_CASE("orient matches an independent sign oracle and its symmetries",
          "[geometry][property]") {
  std::mt19937_64 g(20240817);
  std::size_t checked = 0;
  while (checked < 10000) {
    const long ax = uniform_int(g, -100, 100), ay = uniform_int(g, -100, 100);
    const long bx = uniform_int(g, -100, 100), by = uniform_int(g, -100, 100);
    const long cx = uniform_int(g, -100, 100), cy = uniform_int(g, -100, 100);
    // independent oracle: integer determinant, no Rational involved
    const long long det = static_cast<long long>(bx - ax) * (cy - ay) -
                          static_cast<long long>(by - ay) * (cx - ax);
    if (det == 0) continue;
    ++checked;
    const Point a = pt(ax, ay), b = pt(bx, by), c = pt(cx, cy);
    const Orientation o = orient(a, b, c);
    REQUIRE(orientation_value(o) == (det > 0 ? 1 : -1));
    // antisymmetry and cyclic invariance
    REQUIRE(orient(b, a, c) == opposite(o));
    REQUIRE(orient(a, c, b) == opposite(o));
    REQUIRE(orient(b, c, a) == o);
    REQUIRE(orient(c, a, b) == o);
  }
}

TEST_CASE("validate sorts by x and rejects degeneracies", "[pointset]") {
  const PointSet P = validate({pt(2, 4), pt(0, 0), pt(1, 1)});
  REQUIRE(P.size() == 3);
  CHECK(P[0] == pt(0, 0));
  CHECK(P[1] == pt(1, 1));
  CHECK(P[2] == pt(2, 4));

  CHECK(validate({}).size() == 0);

  try {
    validate({pt(0, 0), pt(1, 1), pt(2, 2)});
    FAIL("expected collinear failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::collinear_triple);
  }
  try {
    validate({pt(0, 0), pt(0, 1)});
    FAIL("expected duplicate-x failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::duplicate_x);
  }
}

TEST_CASE("is_above tests sidedness against a left-to-right line",
          "[geometry]") {
  CHECK(is_above(pt(0, 1), pt(-1, 0), pt(1, 0)));
  CHECK_FALSE(is_above(pt(0, -1), pt(-1, 0), pt(1, 0)));
  // the line through (1,-1),(2,-4) passes through (0,2); (0,0) is below it
  CHECK_FALSE(is_above(pt(0, 0), pt(1, -1), pt(2, -4)));
  CHECK(is_below(pt(0, 0), pt(1, -1), pt(2, -4)));

  try {
    is_above(pt(0, 1), pt(1, 0), pt(-1, 0));
    FAIL("expected line-order failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::bad_line_order);
  }
}

TEST_CASE("extreme_points finds the hull and its complement", "[pointset]") {
  const PointSet W = validate({pt(0, 0), pt(1, 3), pt(2, 1), pt(4, 0)});
  CHECK(extreme_points(W) == std::vector<std::size_t>{0, 1, 3});
  CHECK(interior_points(W) == std::vector<std::size_t>{2});
  CHECK_FALSE(is_convex_position(W));
  CHECK(is_wheel_set(W));

  const PointSet C = validate({pt(0, 0), pt(1, 1), pt(2, 4)});
  CHECK(extreme_points(C).size() == 3);
  CHECK(is_convex_position(C));

  const PointSet single = validate({pt(7, 3)});
  CHECK(extreme_points(single) == std::vector<std::size_t>{0});

  try {
    extreme_points(validate({}));
    FAIL("expected failure on the empty set");
  } catch (const Error& e) {
    CHECK(e.code == errc::invalid_argument);
  }
}

TEST_CASE("same_signature compares under the x-order bijection", "[pointset]") {
  const PointSet cup = validate({pt(0, 0), pt(1, 1), pt(2, 4)});
  const PointSet cap = validate({pt(0, 0), pt(1, 1), pt(2, 0)});
  CHECK(same_signature(cup, cup));
  CHECK_FALSE(same_signature(cup, cap));

  // affine orientation-preserving images keep the signature
  std::vector<Point> moved;
  for (const Point& p : cup)
    moved.push_back({p.x * 3 + 1, p.y * 2 - Rational(5, 7)});
  CHECK(same_signature(cup, validate(std::move(moved))));

  CHECK_FALSE(same_signature(cup, make_cup(4)));
}

TEST_CASE("same_order_type searches bijections with pruning", "[pointset]") {
  const PointSet a3 = validate({pt(0, 0), pt(1, 5), pt(3, 1)});
  const PointSet b3 = validate({pt(-2, 0), pt(0, -4), pt(5, 0)});
  CHECK(same_order_type(a3, b3).has_value());

  const PointSet quad = validate({pt(0, 0), pt(1, 3), pt(2, 1), pt(3, 0)});
  CHECK_FALSE(same_order_type(make_convex(4), quad).has_value());

  const auto bij = same_order_type(make_cup(4), make_cap(4));
  REQUIRE(bij.has_value());
  CHECK(*bij == std::vector<std::size_t>{0, 3, 2, 1});

  // returned bijections really preserve every triple orientation
  const PointSet P = make_cup(4), Q = make_cap(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        CHECK(P.triple(i, j, k) == Q.triple((*bij)[i], (*bij)[j], (*bij)[k]));

  try {
    same_order_type(make_cup(10), make_cap(10));
    FAIL("expected size-limit failure");
  } catch (const Error& e) {
    CHECK(e.code == errc::size_limit);
  }
}

TEST_CASE("same_order_type is an equivalence relation on a small corpus",
          "[pointset][property]") {
  std::vector<PointSet> corpus;
  for (std::size_t n = 3; n <= 5; ++n) {
    corpus.push_back(make_cup(n));
    corpus.push_back(make_cap(n));
    corpus.push_back(make_convex(n));
    for (std::uint64_t s = 0; s < 3; ++s)
      corpus.push_back(make_random_grid(n, derive_seed(11, n * 8 + s)));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(same_order_type(corpus[i], corpus[i]).has_value());  // reflexive
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const bool ij = same_order_type(corpus[i], corpus[j]).has_value();
      const bool ji = same_order_type(corpus[j], corpus[i]).has_value();
      CHECK(ij == ji);  // symmetric
      if (!ij) continue;
      for (std::size_t k = 0; k < corpus.size(); ++k)
        if (same_order_type(corpus[j], corpus[k]))
          CHECK(same_order_type(corpus[i], corpus[k]).has_value());  // transitive
    }
  }
}

TEST_CASE("is_cup_or_cap detects uniform triple orientation", "[pointset]") {
  CHECK(is_cup_or_cap(validate({pt(0, 0), pt(1, 1), pt(2, 4)})));
  CHECK(is_cup_or_cap(validate({pt(0, 0), pt(1, 1), pt(2, 0)})));
  CHECK_FALSE(is_cup_or_cap(validate({pt(0, 0), pt(1, 3), pt(2, 1), pt(3, 2)})));
  CHECK(is_cup_or_cap(validate({pt(4, 2)})));

  // cups and caps are in convex position
  for (std::size_t n = 3; n <= 8; ++n) {
    CHECK(is_cup_or_cap(make_cup(n)));
    CHECK(is_cup_or_cap(make_cap(n)));
    CHECK(is_convex_position(make_cup(n)));
    CHECK(is_convex_position(make_cap(n)));
  }
  for (std::uint64_t s = 0; s < 40; ++s) {
    const PointSet P = make_random_grid(4 + s % 5, derive_seed(13, s));
    if (is_cup_or_cap(P)) CHECK(is_convex_position(P));
  }
}

TEST_CASE("order type tables agree with direct orientation queries",
          "[pointset]") {
  const PointSet P = make_random_grid(6, 99);
  const OrderTypeTable T(P);
  REQUIRE(T.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k)
        CHECK(T.at(i, j, k) == P.triple(i, j, k));
}

TEST_CASE("corpus generators emit valid sets of the promised shape",
          "[corpus]") {
  for (std::size_t n = 3; n <= 7; ++n) {
    CHECK(make_cup(n).size() == n);
    CHECK(make_convex(n).size() == n);
    CHECK(is_convex_position(make_convex(n)));
    if (n >= 4) {
      CHECK(interior_points(make_wheel(n)).size() == 1);
      CHECK(is_wheel_set(make_wheel(n)));
    }
    const PointSet rc = make_random_convex(n, derive_seed(3, n));
    CHECK(is_convex_position(rc));
    const PointSet rw = make_random_wheel(n + 1, derive_seed(4, n));
    CHECK(is_wheel_set(rw));
    CHECK(make_random_grid(n, derive_seed(5, n)).size() == n);
  }
  // deterministic per seed
  CHECK(to_string(make_random_grid(6, 42)) == to_string(make_random_grid(6, 42)));
  CHECK(to_string(make_random_grid(6, 42)) != to_string(make_random_grid(6, 43)));
}

TEST_CASE("subset keeps relative order and validity", "[pointset]") {
  const PointSet P = make_cup(6);
  const PointSet S = subset(P, {1, 3, 4});
  REQUIRE(S.size() == 3);
  CHECK(S[0] == P[1]);
  CHECK(S[2] == P[4]);
}
