#include "syslab/samples.hpp"

#include <algorithm>
#include <set>

#include "syslab/eplane.hpp"
#include "syslab/error.hpp"

namespace syslab {

FlagComplex plane_region(const std::string& name, const std::vector<AxialCoord>& coords) {
  const std::set<AxialCoord> region(coords.begin(), coords.end());
  ComplexBuilder b;
  for (const AxialCoord& c : region) b.add_vertex(PlaneGenerator::key(c));
  for (const AxialCoord& c : region) {
    const VertexId u = b.add_vertex(PlaneGenerator::key(c));
    // three of the six directions, so each edge is added once
    for (int k = 0; k < 3; ++k) {
      const AxialCoord d = c + kUnitSteps[k];
      if (region.count(d)) b.add_edge(u, b.add_vertex(PlaneGenerator::key(d)));
    }
  }
  return std::move(b).build(name, true);
}

std::vector<std::string> flat_disk_sample_names() { return {"disk-hex3", "disk-para", "disk-L"}; }

FlagComplex flat_disk_sample(const std::string& name) {
  std::vector<AxialCoord> pts;
  if (name == "disk-hex3") {
    for (int b = -3; b <= 3; ++b)
      for (int a = -3; a <= 3; ++a)
        if (lattice_norm({a, b}) <= 3) pts.push_back({a, b});
  } else if (name == "disk-para") {
    for (int b = 0; b <= 3; ++b)
      for (int a = 0; a <= 5; ++a) pts.push_back({a, b});
  } else if (name == "disk-L") {
    for (int b = 0; b <= 5; ++b)
      for (int a = 0; a <= (b <= 1 ? 5 : 1); ++a) pts.push_back({a, b});
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown flat disk sample '" + name + "'");
  }
  return plane_region(name, pts);
}

FlagComplex octahedron() {
  ComplexBuilder b;
  for (int v = 0; v < 6; ++v) b.add_vertex({v, 0, 0});
  // antipodal pairs {0,1}, {2,3}, {4,5}
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) b.add_edge(VertexId{static_cast<std::uint32_t>(u)}, VertexId{static_cast<std::uint32_t>(v)});
  return std::move(b).build("octahedron");
}

BookGenerator::BookGenerator(int sheets) : sheets_(sheets) {
  if (sheets < 1) throw Error(ErrorCode::InvalidArgument, "a book needs at least one sheet");
}

GeneratorKey BookGenerator::key(int sheet, AxialCoord c) {
  if (c.b < 0) throw Error(ErrorCode::InvalidArgument, "book sheets are upper half-planes");
  if (c.b == 0) return {-1, c.a, 0};
  return {sheet, c.a, c.b};
}

std::vector<GeneratorKey> BookGenerator::neighbors(const GeneratorKey& key) const {
  std::vector<GeneratorKey> out;
  const AxialCoord c{key[1], key[2]};
  if (key[0] < 0) {
    out.push_back({-1, c.a - 1, 0});
    out.push_back({-1, c.a + 1, 0});
    for (int s = 0; s < sheets_; ++s) {
      out.push_back({s, c.a, 1});
      out.push_back({s, c.a - 1, 1});
    }
    return out;
  }
  const int sheet = static_cast<int>(key[0]);
  for (const AxialCoord& e : kUnitSteps) {
    const AxialCoord d = c + e;
    if (d.b >= 0) out.push_back(BookGenerator::key(sheet, d));
  }
  return out;
}

ConePlaneGenerator::ConePlaneGenerator(int period) : period_(period) {
  if (period < 1) throw Error(ErrorCode::InvalidArgument, "cone period must be positive");
}

bool ConePlaneGenerator::has_apex(AxialCoord base) const {
  auto mod = [&](std::int64_t v) { return ((v % period_) + period_) % period_; };
  return mod(base.a) == 0 && mod(base.b) == 0;
}

int ConePlaneGenerator::degree_bound() const { return period_ == 1 ? 9 : 7; }

std::vector<GeneratorKey> ConePlaneGenerator::neighbors(const GeneratorKey& key) const {
  const AxialCoord c{key[1], key[0]};
  std::vector<GeneratorKey> out;
  if (key[2] == 1) {
    for (const AxialCoord& d : {c, c + AxialCoord{1, 0}, c + AxialCoord{0, 1}}) out.push_back({d.b, d.a, 0});
    return out;
  }
  for (const AxialCoord& e : kUnitSteps) out.push_back(PlaneGenerator::key(c + e));
  // upward triangles containing c have bases c, c-(1,0), c-(0,1)
  for (const AxialCoord& base : {c, c - AxialCoord{1, 0}, c - AxialCoord{0, 1}})
    if (has_apex(base)) out.push_back({base.b, base.a, 1});
  return out;
}

std::unique_ptr<Generator> make_generator(const std::string& kind, int parameter) {
  if (kind == "eplane") return std::make_unique<PlaneGenerator>();
  if (kind == "book") return std::make_unique<BookGenerator>(parameter);
  if (kind == "cone-plane") return std::make_unique<ConePlaneGenerator>(parameter);
  throw Error(ErrorCode::InvalidArgument, "unknown generator '" + kind + "'");
}

FlagComplex tree_t(int depth) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "tree depth must be positive");
  ComplexBuilder b;
  for (int m = 0; m <= depth + 1; ++m) {
    b.add_vertex({m, 0, 0});
    if (m > 0) b.add_edge(b.add_vertex({m - 1, 0, 0}), b.add_vertex({m, 0, 0}));
  }
  for (int n = 1; n <= depth; ++n)
    for (int j = 1; j <= n; ++j) b.add_edge(b.add_vertex({n, j - 1, 0}), b.add_vertex({n, j, 0}));
  return std::move(b).build("tree-T" + std::to_string(depth));
}

std::vector<FlatEmbedding> bundled_flat_embeddings() {
  std::vector<FlatEmbedding> out;
  // two sheets of a three-sheet book form a plane; the lower half-plane is
  // folded onto sheet 1 by (a, b) -> (a + b, -b)
  out.push_back({"book3-sheets01", std::make_shared<BookGenerator>(3),
                 [](AxialCoord c) {
                   return c.b >= 0 ? BookGenerator::key(0, c) : BookGenerator::key(1, {c.a + c.b, -c.b});
                 },
                 {-1, 0, 0}});
  out.push_back({"cone-plane3", std::make_shared<ConePlaneGenerator>(3),
                 [](AxialCoord c) { return GeneratorKey{c.b, c.a, 0}; }, {0, 0, 0}});
  out.push_back({"cone-plane1", std::make_shared<ConePlaneGenerator>(1),
                 [](AxialCoord c) { return GeneratorKey{c.b, c.a, 0}; }, {0, 0, 0}});
  return out;
}

}  // namespace syslab
