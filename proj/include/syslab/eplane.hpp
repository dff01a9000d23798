#pragma once

// The triangulated plane as an implicit complex, and its finite windows.

#include "syslab/complex.hpp"
#include "syslab/lattice.hpp"

namespace syslab {

class PlaneGenerator : public Generator {
 public:
  std::string name() const override { return "eplane"; }
  std::vector<GeneratorKey> neighbors(const GeneratorKey& key) const override;
  int degree_bound() const override { return 6; }
  bool plane_backed() const override { return true; }

  static GeneratorKey key(AxialCoord c) { return {c.b, c.a, 0}; }
};

// All vertices within lattice distance radius of center.
FlagComplex window(AxialCoord center, int radius);

// Image of a vertex of a plane-backed complex; throws BoundaryUnsafe if the
// image left the window.
VertexId apply_in(const FlagComplex& c, const PlaneIsometry& iso, VertexId v);

}  // namespace syslab
