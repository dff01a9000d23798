#include "syslab/eplane.hpp"

#include "syslab/error.hpp"

namespace syslab {

std::vector<GeneratorKey> PlaneGenerator::neighbors(const GeneratorKey& key) const {
  const AxialCoord c{key[1], key[0]};
  std::vector<GeneratorKey> out;
  out.reserve(6);
  for (const AxialCoord& e : kUnitSteps) out.push_back(PlaneGenerator::key(c + e));
  return out;
}

FlagComplex window(AxialCoord center, int radius) {
  return materialize(PlaneGenerator{}, PlaneGenerator::key(center), radius);
}

VertexId apply_in(const FlagComplex& c, const PlaneIsometry& iso, VertexId v) {
  const AxialCoord img = iso.apply(c.coord(v));
  auto id = c.vertex_at(img);
  if (!id) throw Error(ErrorCode::BoundaryUnsafe, img.str() + " lies outside " + c.name());
  return *id;
}

}  // namespace syslab
