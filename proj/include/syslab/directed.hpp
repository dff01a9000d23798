#pragma once

// Directed geodesics between two vertices, the layers between them and the
// thin/thick pattern of those layers.

#include <vector>

#include "syslab/complex.hpp"

namespace syslab {

struct DirectedGeodesic {
  VertexId from;
  VertexId to;
  // simplices[i] lies at distance i from `from` when reversed is false. After
  // reindexing (reversed = true) the sequence runs from `to` back to `from`,
  // so simplices[i] lies at distance i from `to`.
  std::vector<Simplex> simplices;
  bool reversed = false;

  int length() const { return static_cast<int>(simplices.size()) - 1; }
  // Same simplices indexed in the opposite direction.
  DirectedGeodesic reindexed() const;
};

// Projection construction: sigma_{i+1} spans the vertices of S_{n-i-1}(y)
// adjacent to all of sigma_i. Both defining conditions are re-checked.
DirectedGeodesic directed_geodesic(const FlagComplex& c, VertexId x, VertexId y);

// Checks consecutive disjointness, joint span, and
// Res(s_{i-1}) cap B_1(s_{i+1}) = s_i for every interior i. Returns an empty
// string when all hold, otherwise a description of the first failure.
std::string directed_conditions_failure(const FlagComplex& c, const std::vector<Simplex>& seq);

struct Layer {
  int index = 0;
  std::vector<VertexId> vertices;
  int thickness = 0;
  bool thin = true;
  // the pair of simplices the thickness is measured against
  Simplex sigma;
  Simplex tau;
};

struct LayerProfile {
  VertexId x;
  VertexId y;
  int n = 0;
  DirectedGeodesic sigma;  // from x to y
  DirectedGeodesic tau;    // from y to x, indexed from x
  std::vector<Layer> layers;  // indices 0..n
};

LayerProfile layers(const FlagComplex& c, VertexId x, VertexId y);

struct ThickInterval {
  int j = 0;
  int k = 0;
  friend bool operator==(const ThickInterval&, const ThickInterval&) = default;
};

std::vector<ThickInterval> thick_intervals(const std::vector<Layer>& layers);
// thin[i] for i = 0..n
std::vector<ThickInterval> thick_intervals(const std::vector<bool>& thin);

}  // namespace syslab
