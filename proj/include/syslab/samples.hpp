#pragma once

// Bundled sample complexes: finite flat disks cut out of the plane, the
// octahedron, books of half-planes, the plane with coned-off triangles, and the
// tree with a branch of length n at every integer n.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "syslab/complex.hpp"

namespace syslab {

// Induced subcomplex of the plane on the given vertices; finite, plane-backed.
FlagComplex plane_region(const std::string& name, const std::vector<AxialCoord>& coords);

// "disk-hex3", "disk-para", "disk-L"
FlagComplex flat_disk_sample(const std::string& name);
std::vector<std::string> flat_disk_sample_names();

FlagComplex octahedron();

// k copies of the closed upper half-plane glued along the line b = 0.
// Spine vertex (a, 0) has key (-1, a, 0); vertex (a, b), b >= 1, of sheet s has key (s, a, b).
class BookGenerator : public Generator {
 public:
  explicit BookGenerator(int sheets);
  std::string name() const override { return "book" + std::to_string(sheets_); }
  std::vector<GeneratorKey> neighbors(const GeneratorKey& key) const override;
  int degree_bound() const override { return 2 + 2 * sheets_; }

  static GeneratorKey key(int sheet, AxialCoord c);

 private:
  int sheets_;
};

// The plane with an extra vertex coned over every upward triangle
// {(a,b),(a+1,b),(a,b+1)} with a and b divisible by `period`.
// Plane vertex (a, b) has key (b, a, 0), the apex over the triangle at (a, b) has key (b, a, 1).
class ConePlaneGenerator : public Generator {
 public:
  explicit ConePlaneGenerator(int period);
  std::string name() const override { return "cone-plane" + std::to_string(period_); }
  std::vector<GeneratorKey> neighbors(const GeneratorKey& key) const override;
  int degree_bound() const override;

  bool has_apex(AxialCoord base) const;

 private:
  int period_;
};

std::unique_ptr<Generator> make_generator(const std::string& kind, int parameter);

// Half-line 0..depth+1 with a path of length n hanging off vertex n for n = 1..depth.
// Half-line vertex m has key (m, 0, 0); vertex j of branch n has key (n, j, 0).
// The last half-line vertex stands for the unbounded continuation.
FlagComplex tree_t(int depth);

// An isometric copy of the plane inside a larger systolic complex.
struct FlatEmbedding {
  std::string name;
  std::shared_ptr<const Generator> ambient;
  std::function<GeneratorKey(AxialCoord)> map;
  GeneratorKey root;
};

std::vector<FlatEmbedding> bundled_flat_embeddings();

}  // namespace syslab
