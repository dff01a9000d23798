#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "syslab/eplane.hpp"
#include "syslab/error.hpp"
#include "syslab/isometry_dyn.hpp"
#include "syslab/samples.hpp"

using namespace syslab;

namespace {

int bfs_displacement(const PlaneIsometry& h, AxialCoord v) {
  const AxialCoord w = h.apply(v);
  return oracle::lattice_bfs({v.a, v.b}, {w.a, w.b});
}

// minimum of the displacement over a box, by BFS
int scanned_translation_length(const PlaneIsometry& h, int r) {
  int best = 1 << 20;
  for (int a = -r; a <= r; ++a)
    for (int b = -r; b <= r; ++b) best = std::min(best, bfs_displacement(h, {a, b}));
  return best;
}

std::vector<AxialCoord> coords(const FlagComplex& c, const VertexPath& p) {
  std::vector<AxialCoord> out;
  for (VertexId v : p) out.push_back(c.coord(v));
  return out;
}

const PlaneIsometry kGlide = PlaneIsometry::glide({1, 1});

}  // namespace

TEST_CASE("hyperbolicity of plane maps") {
  CHECK(is_hyperbolic(PlaneIsometry::translation({1, 0})));
  CHECK_FALSE(is_hyperbolic(PlaneIsometry::identity()));
  CHECK_FALSE(is_hyperbolic(PlaneIsometry::rotation60(1)));
  CHECK_FALSE(is_hyperbolic(PlaneIsometry::rotation60(3, {2, 5})));
  CHECK(is_hyperbolic(kGlide));
  // a reflection fixes its mirror line
  CHECK_FALSE(is_hyperbolic(PlaneIsometry::swap()));
  CHECK_FALSE(is_hyperbolic(PlaneIsometry::glide({1, -1})));

  // agree with a direct search for fixed vertices, edge midpoints and triangle centres
  const std::vector<std::string> lits{"translate(2,-1)", "glide(0,0)", "glide(2,2)", "glide(1,0)", "rot60^2 @ (1,1)",
                                      "rot60^3", "glide(3,-3)", "swap * translate(1,0)"};
  for (const std::string& lit : lits) {
    const PlaneIsometry h = parse_isometry(lit);
    bool fixes = false;
    for (int a = -12; a <= 12; ++a)
      for (int b = -12; b <= 12; ++b) {
        const AxialCoord v{a, b};
        // 3 * barycentre of a simplex is a lattice point; compare tripled coordinates
        const std::vector<std::vector<AxialCoord>> simplices{
            {v}, {v, v + AxialCoord{1, 0}}, {v, v + AxialCoord{0, 1}}, {v, v + AxialCoord{-1, 1}},
            {v, v + AxialCoord{1, 0}, v + AxialCoord{0, 1}}, {v, v + AxialCoord{-1, 1}, v + AxialCoord{0, 1}}};
        for (auto s : simplices) {
          std::vector<AxialCoord> img;
          for (AxialCoord p : s) img.push_back(h.apply(p));
          std::sort(s.begin(), s.end());
          std::sort(img.begin(), img.end());
          fixes = fixes || s == img;
        }
      }
    INFO(lit);
    CHECK(is_hyperbolic(h) == !fixes);
  }
}

TEST_CASE("hyperbolicity of permutation tables") {
  const FlagComplex oct = octahedron();
  std::vector<VertexId> id;
  for (std::uint32_t v = 0; v < oct.size(); ++v) id.push_back(VertexId{v});
  CHECK_FALSE(is_hyperbolic(oct, Isometry::table(oct, id)));
  const FlagComplex w = window({0, 0}, 3);
  std::vector<VertexId> same;
  for (std::uint32_t v = 0; v < w.size(); ++v) same.push_back(VertexId{v});
  CHECK_THROWS_AS(Isometry::table(w, std::vector<VertexId>(w.size(), VertexId{0})), Error);
  CHECK_FALSE(is_hyperbolic(w, Isometry::table(w, same)));

  const FlagComplex hex = flat_disk_sample("disk-hex3");
  std::vector<VertexId> rot(hex.size());
  const PlaneIsometry r = PlaneIsometry::rotation60(1);
  for (std::uint32_t v = 0; v < hex.size(); ++v) rot[v] = hex.at(r.apply(hex.coord(VertexId{v})));
  CHECK_FALSE(is_hyperbolic(hex, Isometry::table(hex, rot)));
}

TEST_CASE("permutation files") {
  const FlagComplex hex = flat_disk_sample("disk-hex3");
  const PlaneIsometry r = PlaneIsometry::rotation60(2);
  std::ostringstream text;
  text << "perm v1\n# rotation by 120 degrees\n";
  for (std::uint32_t v = 0; v < hex.size(); ++v)
    text << v << " -> " << hex.at(r.apply(hex.coord(VertexId{v}))).value << "\n";
  std::istringstream in(text.str());
  const Isometry h = parse_permutation(in, hex);
  for (std::uint32_t v = 0; v < hex.size(); ++v)
    CHECK(hex.coord(h.apply(hex, VertexId{v})) == r.apply(hex.coord(VertexId{v})));
  CHECK(h.apply_power(hex, VertexId{5}, 3) == VertexId{5});
  CHECK(h.apply_power(hex, h.apply(hex, VertexId{4}), -1) == VertexId{4});

  auto parse = [&](const std::string& s) {
    std::istringstream is(s);
    return parse_permutation(is, hex);
  };
  try {
    parse("perm v2\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK_THROWS_AS(parse("perm v1\n0 -> 1\n"), Error);
  CHECK_THROWS_AS(parse("perm v1\n0 => 1\n"), Error);
  // a transposition of two vertices breaks edges
  std::string bad = "perm v1\n";
  for (std::uint32_t v = 0; v < hex.size(); ++v)
    bad += std::to_string(v) + " -> " + std::to_string(v == 0 ? 1 : v == 1 ? 0 : v) + "\n";
  try {
    parse(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("translation length") {
  CHECK(translation_length(PlaneIsometry::translation({1, 0})) == 1);
  CHECK(translation_length(kGlide) == 2);
  CHECK(translation_length(PlaneIsometry::translation({2, 2})) == 4);
  CHECK_THROWS_AS(translation_length(PlaneIsometry::rotation60(1)), Error);

  for (const std::string lit : {"glide(1,1)", "glide(3,1)", "glide(2,-1)", "glide(0,5)", "translate(3,-1)",
                                "swap * translate(4,1)", "rot60^3 * swap * translate(2,0)"}) {
    const PlaneIsometry h = parse_isometry(lit);
    if (!is_hyperbolic(h)) continue;
    INFO(lit);
    CHECK(translation_length(h) == scanned_translation_length(h, 8));
  }
}

TEST_CASE("glide displacement closed form") {
  // displacement vector is (1-k, 1+k) with k = a - b
  for (int a = -9; a <= 9; ++a)
    for (int b = -9; b <= 9; ++b) {
      const int k = a - b;
      const int expected = std::abs(k) <= 1 ? 2 : std::abs(k) + 1;
      CHECK(bfs_displacement(kGlide, {a, b}) == expected);
      CHECK(plane_displacement(kGlide, {a, b}) == expected);
    }
  // the max(|1-k|, |1+k|) shortcut is off at k = 0, where the vector (1,1) has length 2
  CHECK(plane_displacement(kGlide, {3, 3}) == 2);
}

TEST_CASE("displacement sets") {
  const FlagComplex w = window({0, 0}, 8);
  const Isometry g = Isometry::plane(kGlide);
  for (int K : {2, 3}) {
    const DisplacementSet s = displacement_set(w, g, K);
    for (std::uint32_t v = 0; v < w.size(); ++v) {
      const AxialCoord c = w.coord(VertexId{v});
      CHECK(s.contains(VertexId{v}) == (std::abs(c.a - c.b) <= K - 1));
    }
  }
  CHECK(displacement_set(w, Isometry::plane(PlaneIsometry::translation({1, 0})), 1).vertices.size() == w.size());

  // monotone in K, and Min(h) = disp_L(h)
  std::vector<VertexId> prev;
  for (int K = 0; K <= 8; ++K) {
    const auto cur = displacement_set(w, g, K).vertices;
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    if (K < 2) CHECK(cur.empty());
    prev = cur;
  }
  const auto min_set = displacement_set(w, g, translation_length(w, g)).vertices;
  for (VertexId v : min_set) CHECK(displacement(w, g, v) == 2);

  // C-neighbourhood of disp_K lies in disp_{K+2C}
  for (int K : {2, 3, 5})
    for (int C : {1, 2}) {
      const auto base = displacement_set(w, g, K).vertices;
      const auto nbhd = bfs_distances(w, base, C);
      const auto big = displacement_set(w, g, K + 2 * C);
      for (std::uint32_t v = 0; v < w.size(); ++v)
        if (nbhd[v] >= 0) CHECK(big.contains(VertexId{v}));
    }

  // disp_K lies within a bounded neighbourhood of Min for larger K: d(v, Min) = (|k| - 1) / 2 rounded up
  const auto from_min = bfs_distances(w, min_set, 64);
  for (int K = 2; K <= 7; ++K) {
    int worst = 0;
    for (VertexId v : displacement_set(w, g, K).vertices) worst = std::max(worst, from_min[v.value]);
    CHECK(worst == (K - 1) / 2);
  }
}

TEST_CASE("displacement on tables matches the plane") {
  const FlagComplex hex = flat_disk_sample("disk-hex3");
  const PlaneIsometry r = PlaneIsometry::rotation60(1);
  std::vector<VertexId> rot(hex.size());
  for (std::uint32_t v = 0; v < hex.size(); ++v) rot[v] = hex.at(r.apply(hex.coord(VertexId{v})));
  const Isometry t = Isometry::table(hex, rot);
  for (std::uint32_t v = 0; v < hex.size(); ++v)
    CHECK(displacement(hex, t, VertexId{v}) == plane_displacement(r, hex.coord(VertexId{v})));
  CHECK(t.inverse().apply(hex, t.apply(hex, VertexId{3})) == VertexId{3});
}

TEST_CASE("Euclidean geodesics between minimal vertices stay near Min") {
  const FlagComplex w = window({0, 0}, 24);
  const Isometry g = Isometry::plane(kGlide);
  const ProximityReport anchor = check_min_proximity(w, g, {{w.at({0, 0}), w.at({6, 6})}});
  CHECK(anchor.bound == 24);
  CHECK(anchor.translation_length == 2);
  CHECK(anchor.violations == 0);
  CHECK(anchor.max_displacement == 2);  // the geodesic to (6,6) runs along the strip

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> co(-5, 5), off(-1, 1);
  while (pairs.size() < 40) {
    const int a = co(rng), b = co(rng);
    pairs.push_back({w.at({a, a + off(rng)}), w.at({b, b + off(rng)})});
  }
  const ProximityReport rep = check_min_proximity(w, g, pairs);
  CHECK(rep.pairs == 40);
  CHECK(rep.violations == 0);
  CHECK(rep.max_displacement <= 24);
  CHECK(rep.max_displacement >= 2);

  const Isometry tr = Isometry::plane(PlaneIsometry::translation({2, -1}));
  const ProximityReport flat = check_min_proximity(w, tr, {{w.at({0, 0}), w.at({3, 4})}, {w.at({1, 1}), w.at({1, 1})}});
  CHECK(flat.max_displacement == 2);
  CHECK_THROWS_AS(check_min_proximity(w, g, {{w.at({0, 0}), w.at({5, 0})}}), Error);
}

TEST_CASE("fellow traveller bound between minimal vertices") {
  const FlagComplex w = window({0, 0}, 26);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> co(-5, 5), off(-1, 1);
  for (int t = 0; t < 30; ++t) {
    const int a = co(rng), b = co(rng);
    const VertexId x = w.at({a, a + off(rng)}), y = w.at({b, b + off(rng)});
    const auto gxy = directed_geodesic(w, x, y).simplices;
    const auto hxy = directed_geodesic(w, apply_in(w, kGlide, x), apply_in(w, kGlide, y)).simplices;
    REQUIRE(gxy.size() == hxy.size());
    const int bound = 3 * 2 + 1;
    for (std::size_t i = 0; i < gxy.size(); ++i)
      for (VertexId u : gxy[i])
        for (VertexId v : hxy[i]) CHECK(lattice_distance(w.coord(u), w.coord(v)) <= bound);
  }
}

TEST_CASE("invariant geodesic on the plane") {
  const PlaneIsometry diag = PlaneIsometry::translation({1, 1});
  const auto stair = invariant_geodesic_on_plane(diag, {0, 0}, 8);
  CHECK(stair == std::vector<AxialCoord>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}});
  CHECK(squared_axis_deviation(diag, {0, 0}, stair) == ExactScalar(Rational(1, 4)));

  const auto line = invariant_geodesic_on_plane(PlaneIsometry::translation({3, 0}), {0, 0}, 7);
  for (int i = 0; i <= 7; ++i) CHECK(line[i] == AxialCoord{i, 0});
  CHECK(squared_axis_deviation(PlaneIsometry::translation({3, 0}), {0, 0}, line) == ExactScalar(0));

  CHECK_THROWS_AS(invariant_geodesic_on_plane(kGlide, {0, 0}, 4), Error);
  CHECK_THROWS_AS(invariant_geodesic_on_plane(PlaneIsometry::identity(), {0, 0}, 4), Error);

  // geodesic, h-invariant, and within distance 1 of the axis for assorted translations
  for (AxialCoord t : std::vector<AxialCoord>{{3, 1}, {2, 3}, {-4, 1}, {1, -5}, {0, 4}, {-2, -3}}) {
    const PlaneIsometry h = PlaneIsometry::translation(t);
    const AxialCoord x{2, -1};
    const auto p = invariant_geodesic_on_plane(h, x, 20);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(lattice_adjacent(p[i], p[i + 1]));
    CHECK(lattice_distance(p.front(), p.back()) == 20);
    const std::int64_t n = lattice_norm(t);
    for (std::size_t i = 0; i + n < p.size(); ++i) CHECK(p[i + n] == h.apply(p[i]));
    CHECK(squared_axis_deviation(h, x, p) <= ExactScalar(1));
  }

  // conjugating by a rotation rotates the output when no step is a tie; with
  // ties (t = (3,1) has one per period) only the deviation is preserved
  for (AxialCoord t : std::vector<AxialCoord>{{5, -2}, {3, 1}, {1, 3}})
    for (int k = 1; k < 6; ++k) {
      const PlaneIsometry r = PlaneIsometry::rotation60(k);
      const PlaneIsometry h = PlaneIsometry::translation(t), rh = PlaneIsometry::translation(r.linear(t));
      const AxialCoord x{1, 2};
      const auto p = invariant_geodesic_on_plane(h, x, 12);
      const auto q = invariant_geodesic_on_plane(rh, r.apply(x), 12);
      CHECK(squared_axis_deviation(h, x, p) == squared_axis_deviation(rh, r.apply(x), q));
      if (t == AxialCoord{5, -2})
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(q[i] == r.apply(p[i]));
    }
}

TEST_CASE("central good geodesic") {
  const FlagComplex w = window({0, 0}, 20);
  const VertexId o = w.at({0, 0});
  const Isometry tr = Isometry::plane(PlaneIsometry::translation({2, 0}));
  const AxisApprox a = central_good_geodesic(w, tr, o, 4);
  CHECK(a.K == 2);
  CHECK(a.family.size() == 4);
  for (AxialCoord c : coords(w, a.segment)) CHECK(c.b == 0);
  CHECK(a.segment.size() == 5);  // shared by every truncation: the m = 1 geodesic

  const Isometry g = Isometry::plane(kGlide);
  const AxisApprox b = central_good_geodesic(w, g, o, 4);
  CHECK(b.K <= 24);
  CHECK_FALSE(b.segment.empty());
  for (AxialCoord c : coords(w, b.segment)) CHECK(std::abs(c.a - c.b) <= 1);

  const AxisApprox one = central_good_geodesic(w, g, o, 1);
  REQUIRE(one.family.size() == 1);
  CHECK(one.segment == one.family[0]);
  const AxisApprox strided = central_good_geodesic(w, g, o, 4, 2);
  CHECK(strided.family.size() == 2);

  CHECK_THROWS_AS(central_good_geodesic(w, g, w.at({3, 0}), 2), Error);
  CHECK_THROWS_AS(central_good_geodesic(w, g, o, 12), Error);  // leaves the window
}

TEST_CASE("convergence diagnostic") {
  const FlagComplex w = window({0, 0}, 20);
  const Isometry tr = Isometry::plane(PlaneIsometry::translation({2, 0}));
  const AxisApprox a = central_good_geodesic(w, tr, w.at({0, 0}), 3);
  const ConvergenceReport on = convergence_diagnostic(w, tr, w.at({0, 0}), a, 4);
  CHECK(on.distances == std::vector<int>{0, 0, 0, 0});
  CHECK(on.bounded);

  const ConvergenceReport offaxis = convergence_diagnostic(w, tr, w.at({0, 3}), a, 4);
  CHECK(offaxis.base == 3);
  for (int d : offaxis.distances) CHECK(d <= 3);
  CHECK(offaxis.bounded);

  const Isometry g = Isometry::plane(kGlide);
  const AxisApprox b = central_good_geodesic(w, g, w.at({0, 0}), 3);
  const ConvergenceReport glide = convergence_diagnostic(w, g, w.at({0, 2}), b, 4);
  CHECK(glide.bounded);
  CHECK(glide.distances.size() == 4);
  for (int d : glide.distances) CHECK(d <= glide.base + glide.radius);
}
