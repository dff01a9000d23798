#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "syslab/directed.hpp"
#include "syslab/eplane.hpp"
#include "syslab/error.hpp"
#include "syslab/samples.hpp"

using namespace syslab;

namespace {

using Coords = std::vector<std::vector<AxialCoord>>;

Coords as_coords(const FlagComplex& c, const std::vector<Simplex>& seq) {
  Coords out;
  for (const Simplex& s : seq) {
    std::vector<AxialCoord> cs;
    for (VertexId v : s) cs.push_back(c.coord(v));
    std::sort(cs.begin(), cs.end());
    out.push_back(cs);
  }
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

}  // namespace

TEST_CASE("directed geodesic examples") {
  const FlagComplex w = window({0, 0}, 8);
  const VertexId o = w.at({0, 0});
  CHECK(as_coords(w, directed_geodesic(w, o, w.at({2, 2})).simplices) ==
        Coords{{{0, 0}}, {{1, 0}, {0, 1}}, {{1, 1}}, {{2, 1}, {1, 2}}, {{2, 2}}});
  CHECK(as_coords(w, directed_geodesic(w, o, w.at({3, 0})).simplices) ==
        Coords{{{0, 0}}, {{1, 0}}, {{2, 0}}, {{3, 0}}});
  CHECK(as_coords(w, directed_geodesic(w, o, w.at({4, 2})).simplices) ==
        Coords{{{0, 0}}, {{1, 0}, {0, 1}}, {{1, 1}}, {{2, 1}, {1, 2}}, {{2, 2}}, {{3, 2}}, {{4, 2}}});
  const DirectedGeodesic tau = directed_geodesic(w, w.at({4, 2}), o).reindexed();
  CHECK(tau.from == o);
  CHECK(as_coords(w, tau.simplices) ==
        Coords{{{0, 0}}, {{1, 0}}, {{2, 0}}, {{3, 0}, {2, 1}}, {{3, 1}}, {{4, 1}, {3, 2}}, {{4, 2}}});
  CHECK(as_coords(w, directed_geodesic(w, o, o).simplices) == Coords{{{0, 0}}});
}

TEST_CASE("directed geodesics are unique among condition-satisfying sequences") {
  const FlagComplex w = window({0, 0}, 6);
  oracle::DirectedEnumerator en(w);
  int pairs = 0;
  for (std::uint32_t a = 0; a < w.size(); ++a)
    for (std::uint32_t b = 0; b < w.size(); ++b) {
      const VertexId x{a}, y{b};
      const int d = static_cast<int>(lattice_distance(w.coord(x), w.coord(y)));
      if (d > 4 || lattice_norm(w.coord(x)) > 2) continue;
      const auto all = en.all(x, y);
      REQUIRE(all.size() == 1);
      std::vector<Simplex> expect;
      for (const auto& s : all.front()) expect.emplace_back(s);
      CHECK(directed_geodesic(w, x, y).simplices == expect);
      ++pairs;
    }
  CHECK(pairs > 500);
}

TEST_CASE("directed geodesics in bundled flat disks and ambient samples") {
  for (const std::string& name : flat_disk_sample_names()) {
    const FlagComplex c = flat_disk_sample(name);
    CHECK(check_local_6_large(c).pass);
    oracle::DirectedEnumerator en(c);
    for (std::uint32_t a = 0; a < c.size(); a += 3)
      for (std::uint32_t b = 0; b < c.size(); ++b) {
        const auto all = en.all(VertexId{a}, VertexId{b});
        REQUIRE(all.size() == 1);
        CHECK(directed_geodesic(c, VertexId{a}, VertexId{b}).simplices.size() == all.front().size());
      }
  }
  for (const FlatEmbedding& f : bundled_flat_embeddings()) {
    const FlagComplex c = materialize(*f.ambient, f.root, 7);
    oracle::DirectedEnumerator en(c);
    const VertexId x = *c.find(f.root);
    for (std::uint32_t b = 0; b < c.size(); ++b) {
      if (c.margin(VertexId{b}) < 3) continue;
      const auto all = en.all(x, VertexId{b});
      REQUIRE(all.size() == 1);
      std::vector<Simplex> expect;
      for (const auto& s : all.front()) expect.emplace_back(s);
      CHECK(directed_geodesic(c, x, VertexId{b}).simplices == expect);
    }
  }
}

TEST_CASE("vertex selections from a directed geodesic are geodesics") {
  const FlagComplex w = window({0, 0}, 10);
  const DirectedGeodesic g = directed_geodesic(w, w.at({-1, -2}), w.at({4, 2}));
  std::vector<VertexId> lo, hi;
  for (const Simplex& s : g.simplices) {
    lo.push_back(s.vertices().front());
    hi.push_back(s.vertices().back());
  }
  CHECK(is_geodesic(w, lo));
  CHECK(is_geodesic(w, hi));
}

TEST_CASE("directed geodesics are equivariant") {
  const FlagComplex w = window({0, 0}, 14);
  const std::vector<PlaneIsometry> isos{PlaneIsometry::glide({1, 1}), PlaneIsometry::rotation60(1, {1, 0}),
                                        PlaneIsometry::swap(), PlaneIsometry::translation({-2, 3}),
                                        PlaneIsometry::rotation60(3).then(PlaneIsometry::swap())};
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> co(-4, 4);
  for (const auto& h : isos)
    for (int t = 0; t < 40; ++t) {
      const AxialCoord x{co(rng), co(rng)}, y{co(rng), co(rng)};
      const auto g = directed_geodesic(w, w.at(x), w.at(y));
      const auto hg = directed_geodesic(w, w.at(h.apply(x)), w.at(h.apply(y)));
      REQUIRE(g.simplices.size() == hg.simplices.size());
      for (std::size_t i = 0; i < g.simplices.size(); ++i) {
        std::vector<VertexId> img;
        for (VertexId v : g.simplices[i]) img.push_back(apply_in(w, h, v));
        CHECK(Simplex(img) == hg.simplices[i]);
      }
    }
}

TEST_CASE("fellow traveller bound") {
  const FlagComplex w = window({0, 0}, 16);
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> co(-4, 4);
  const std::vector<PlaneIsometry> isos{PlaneIsometry::glide({1, 1}), PlaneIsometry::translation({2, -1}),
                                        PlaneIsometry::rotation60(1, {1, 1})};
  for (const auto& h : isos)
    for (int t = 0; t < 30; ++t) {
      const AxialCoord x{co(rng), co(rng)}, y{co(rng), co(rng)};
      const std::int64_t bound =
          3 * std::max(lattice_distance(x, h.apply(x)), lattice_distance(y, h.apply(y))) + 1;
      for (const Simplex& s : directed_geodesic(w, w.at(x), w.at(y)).simplices)
        for (VertexId v : s) CHECK(lattice_distance(w.coord(v), h.apply(w.coord(v))) <= bound);
    }
}

TEST_CASE("layers and thickness") {
  const FlagComplex w = window({0, 0}, 8);
  const VertexId o = w.at({0, 0});
  const LayerProfile p = layers(w, o, w.at({4, 2}));
  std::vector<int> thick;
  for (int i = 1; i <= 5; ++i) thick.push_back(p.layers[i].thickness);
  CHECK(thick == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(thick_intervals(p.layers) == std::vector<ThickInterval>{{2, 4}});
  CHECK(p.layers[3].vertices.size() == 3);

  for (const Layer& L : layers(w, o, w.at({3, 0})).layers) CHECK(L.thickness == 0);
  for (const Layer& L : layers(w, o, w.at({2, 2})).layers) CHECK(L.thin);

  // layers(x,y)[i] = layers(y,x)[n-i]
  const LayerProfile q = layers(w, w.at({4, 2}), o);
  for (int i = 0; i <= 6; ++i) CHECK(p.layers[i].vertices == q.layers[6 - i].vertices);
  // the layer sets match the closed-form plane layers
  for (int i = 0; i <= 6; ++i) {
    std::vector<AxialCoord> cs;
    for (VertexId v : p.layers[i].vertices) cs.push_back(w.coord(v));
    std::sort(cs.begin(), cs.end());
    CHECK(cs == plane_layer({0, 0}, {4, 2}, i));
  }
}

TEST_CASE("thick interval scanning") {
  CHECK(thick_intervals(std::vector<bool>{true, true, true, false, true, true, true}) ==
        std::vector<ThickInterval>{{2, 4}});
  CHECK(thick_intervals(std::vector<bool>{true, true, true, true}).empty());
  CHECK(thick_intervals(std::vector<bool>{true, true, false, false, true, true}) ==
        std::vector<ThickInterval>{{1, 4}});
  CHECK(thick_intervals(std::vector<bool>{true, true, false, true, false, false, true, true}) ==
        std::vector<ThickInterval>{{1, 3}, {3, 6}});
  CHECK(code_of([] { thick_intervals(std::vector<bool>{true, false, true, true, true}); }) ==
        ErrorCode::MalformedProfile);
  CHECK(code_of([] { thick_intervals(std::vector<bool>{true, true, true, false, true}); }) ==
        ErrorCode::MalformedProfile);
}

TEST_CASE("non-systolic input fails loudly") {
  const FlagComplex octa = octahedron();
  // antipodal vertices 0 and 1: the projection from 0 toward 1 is the 4-cycle {2,3,4,5}
  CHECK(code_of([&] { directed_geodesic(octa, VertexId{0}, VertexId{1}); }) == ErrorCode::ConstructionFailed);
}
