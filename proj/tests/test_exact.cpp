#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "syslab/error.hpp"
#include "syslab/exact.hpp"
#include "syslab/lattice.hpp"

using namespace syslab;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  const Rational big(std::int64_t{1} << 62);
  try {
    (void)(big * big);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("exact scalar sign agrees with high precision evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-2000, 2000), den(1, 60);
  for (int i = 0; i < 20000; ++i) {
    const ExactScalar s(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    const long double v = s.to_long_double();
    if (std::fabs(v) > 1e-9L) CHECK(s.sign() == (v > 0 ? 1 : -1));
  }
  CHECK(ExactScalar(Rational(0)).sign() == 0);
  // 7 - 4 r3 is about 0.0718
  CHECK(ExactScalar(Rational(7), Rational(-4)).sign() == 1);
  CHECK(ExactScalar(Rational(-97), Rational(56)).sign() == -1);  // 97^2 = 3*56^2 + 1
  CHECK(ExactScalar(Rational(97), Rational(-56)).sign() == 1);
}

TEST_CASE("exact scalar field operations") {
  const ExactScalar r3 = ExactScalar::sqrt3();
  CHECK(r3 * r3 == ExactScalar(3));
  const ExactScalar a(Rational(2, 3), Rational(-5, 7));
  const ExactScalar b(Rational(1, 2), Rational(1, 4));
  CHECK((a / b) * b == a);
  CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()));
  CHECK(ExactScalar(Rational(1), Rational(1)).floor() == 2);
  CHECK(ExactScalar(Rational(-1), Rational(-1)).floor() == -3);
  CHECK(ExactScalar(Rational(0), Rational(2)).floor() == 3);
}

TEST_CASE("large coordinates fall back to wide comparison") {
  const std::int64_t big = std::int64_t{3} << 40;
  const ExactScalar s(Rational(big + 1, 1), Rational(-big / 2, 1));
  // p = big+1, q = -big/2: p^2 - 3 q^2 = big^2/4 + ... > 0
  CHECK(s.sign() == 1);
}

TEST_CASE("orientation predicate on lattice points") {
  const PlanePoint o = embed({0, 0}), e = embed({1, 0}), f = embed({0, 1});
  CHECK(orient(o, e, f) == 1);
  CHECK(orient(o, f, e) == -1);
  CHECK(orient(o, e, embed({3, 0})) == 0);
  CHECK(on_segment(o, embed({2, 0}), e));
  CHECK_FALSE(on_segment(o, e, embed({2, 0})));
}

TEST_CASE("lattice distance matches BFS") {
  CHECK(lattice_distance({0, 0}, {3, 2}) == 5);
  CHECK(lattice_distance({0, 0}, {2, -1}) == 2);
  CHECK(lattice_distance({4, 4}, {4, 4}) == 0);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> co(-12, 12);
  int checked = 0;
  while (checked < 10000) {
    const AxialCoord u{co(rng), co(rng)}, v{co(rng), co(rng)};
    if (lattice_norm(u) > 12 || lattice_norm(v) > 12) continue;
    // the full 10k-pair comparison runs against the window graph in test_complex
    if (checked % 50 == 0) CHECK(lattice_distance(u, v) == oracle::lattice_bfs({u.a, u.b}, {v.a, v.b}));
    CHECK(lattice_distance(u, v) == lattice_distance(v, u));
    ++checked;
  }
}

TEST_CASE("embed gives unit edges and compares with the lattice metric") {
  CHECK(embed({0, 1}) == PlanePoint{ExactScalar(Rational(1, 2)), ExactScalar(Rational(0), Rational(1, 2))});
  for (const AxialCoord& e : kUnitSteps) CHECK(squared_norm(embed(e)) == ExactScalar(1));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> co(-9, 9);
  for (int i = 0; i < 2000; ++i) {
    const AxialCoord u{co(rng), co(rng)}, v{co(rng), co(rng)};
    const ExactScalar d2 = squared_norm(embed(u) - embed(v));
    const std::int64_t d = lattice_distance(u, v);
    CHECK(d2 <= ExactScalar(d * d));
    CHECK(ExactScalar(Rational(3 * d * d, 4)) <= d2);
    CHECK(lattice_point_at(embed(u)) == u);
  }
}

TEST_CASE("plane isometries") {
  CHECK(PlaneIsometry::translation({1, 0}).apply({2, 3}) == AxialCoord{3, 3});
  const PlaneIsometry g = PlaneIsometry::glide({1, 1});
  CHECK(g.apply({0, 0}) == AxialCoord{1, 1});
  const PlaneIsometry gg = g.then(g);
  CHECK(gg == PlaneIsometry::translation({2, 2}));
  CHECK(PlaneIsometry::rotation60(6) == PlaneIsometry::identity());
  CHECK(PlaneIsometry::rotation60(1, {2, 1}).apply({2, 1}) == AxialCoord{2, 1});
  CHECK(PlaneIsometry::rotation60(1).apply({1, 0}) == AxialCoord{0, 1});

  const std::vector<PlaneIsometry> isos{g,
                                        PlaneIsometry::rotation60(1, {3, -2}),
                                        PlaneIsometry::rotation60(2).then(PlaneIsometry::swap()),
                                        parse_isometry("rot60^5 @ (1,1) * glide(2,0)")};
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> co(-20, 20);
  for (const auto& h : isos) {
    CHECK(h.then(h.inverse()).is_identity());
    CHECK(h.power(3) == h.then(h).then(h));
    CHECK(h.power(-2).then(h.power(2)).is_identity());
    for (int i = 0; i < 1000; ++i) {
      const AxialCoord u{co(rng), co(rng)}, v{co(rng), co(rng)};
      CHECK(lattice_distance(h.apply(u), h.apply(v)) == lattice_distance(u, v));
    }
    const AxialCoord c{4, -1};
    for (const AxialCoord& e : kUnitSteps) CHECK(lattice_adjacent(h.apply(c), h.apply(c + e)));
  }
}

TEST_CASE("isometry literals") {
  CHECK(parse_isometry("translate(2,-3)") == PlaneIsometry::translation({2, -3}));
  CHECK(parse_isometry(" glide( 1 , 1 ) ") == PlaneIsometry::glide({1, 1}));
  CHECK(parse_isometry("rot60^2 @ (1,0)") == PlaneIsometry::rotation60(2, {1, 0}));
  CHECK(parse_isometry("rot60") == PlaneIsometry::rotation60(1));
  // composition applies the right factor first
  CHECK(parse_isometry("translate(1,0) * rot60").apply({1, 0}) == AxialCoord{1, 1});
  for (const char* s : {"glide(2,5)", "translate(0,0)", "affine(0,-1,1,1,3,4)"})
    CHECK(parse_isometry(parse_isometry(s).str()) == parse_isometry(s));
  for (const char* bad : {"", "translate(1)", "spin(1,2)", "glide(1,2) extra", "affine(2,0,0,1,0,0)"}) {
    try {
      (void)parse_isometry(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("layer lines") {
  const PlaneLine l = layer_line(3, {0, 0}, {4, 2});
  CHECK(orient(l.point, l.point + l.direction, embed({1, 2})) == 0);
  CHECK(orient(l.point, l.point + l.direction, embed({3, 0})) == 0);
  const PlaneLine l0 = layer_line(0, {0, 0}, {4, 2});
  CHECK(l0.point == embed({0, 0}));
  // along the a-axis the layers are single vertices; the line is perpendicular
  for (int i = 0; i <= 5; ++i) {
    const PlaneLine li = layer_line(i, {0, 0}, {5, 0});
    CHECK(li.point == embed({i, 0}));
    CHECK(dot(li.direction, embed({1, 0})).is_zero());
  }
  // every layer of every displacement lies on its reported line
  for (int p = -6; p <= 6; ++p)
    for (int q = -6; q <= 6; ++q) {
      const AxialCoord y{p, q};
      const std::int64_t n = lattice_norm(y);
      for (std::int64_t i = 0; i <= n; ++i) {
        const auto layer = plane_layer({0, 0}, y, i);
        REQUIRE_FALSE(layer.empty());
        const PlaneLine li = layer_line(i, {0, 0}, y);
        for (const AxialCoord& v : layer) CHECK(orient(li.point, li.point + li.direction, embed(v)) == 0);
      }
    }
}
