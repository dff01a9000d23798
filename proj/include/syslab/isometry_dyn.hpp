#pragma once

// Isometries acting on a complex: displacement, translation length,
// displacement sets, and the finite constructions of invariant and central
// good geodesics.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "syslab/euclid_good.hpp"
#include "syslab/lattice.hpp"

namespace syslab {

// A lattice-affine map of the plane (closed form) or a vertex permutation of a
// finite complex.
class Isometry {
 public:
  static Isometry plane(PlaneIsometry h) { return Isometry(std::move(h)); }
  // Validates bijectivity and that every edge maps to an edge.
  static Isometry table(const FlagComplex& c, std::vector<VertexId> image);

  bool is_plane() const { return std::holds_alternative<PlaneIsometry>(map_); }
  const PlaneIsometry& plane_map() const;
  const std::vector<VertexId>& table_map() const;

  // Image inside c; BoundaryUnsafe when a plane map leaves the window.
  VertexId apply(const FlagComplex& c, VertexId v) const;
  VertexId apply_power(const FlagComplex& c, VertexId v, int k) const;  // k may be negative
  Isometry inverse() const;
  std::string str() const;

 private:
  explicit Isometry(PlaneIsometry h) : map_(std::move(h)) {}
  explicit Isometry(std::vector<VertexId> t) : map_(std::move(t)) {}
  std::variant<PlaneIsometry, std::vector<VertexId>> map_;
};

// "perm v1" followed by lines "u -> v"; every vertex listed once.
Isometry parse_permutation(std::istream& in, const FlagComplex& c);
Isometry load_permutation(const std::string& path, const FlagComplex& c);

// d(v, h v); closed form for plane maps, certified window distance otherwise.
int displacement(const FlagComplex& c, const Isometry& h, VertexId v);
std::int64_t plane_displacement(const PlaneIsometry& h, AxialCoord v);

// Plane maps: exact (no fixed point of the affine map). Tables: a fixed simplex
// exists iff some cycle of the permutation is a clique; Inconclusive on a
// window when none is found.
bool is_hyperbolic(const PlaneIsometry& h);
bool is_hyperbolic(const FlagComplex& c, const Isometry& h);

// Plane maps: exact minimum of the displacement over all of the plane.
// Tables: minimum over the (finite) complex.
std::int64_t translation_length(const PlaneIsometry& h);
int translation_length(const FlagComplex& c, const Isometry& h);

struct DisplacementSet {
  int K = 0;
  std::vector<VertexId> vertices;  // sorted
  std::string window;
  bool contains(VertexId v) const;
};

DisplacementSet displacement_set(const FlagComplex& c, const Isometry& h, int K);

struct ProximityReport {
  int translation_length = 0;
  int bound = 0;  // 9 L + 6
  std::size_t pairs = 0;
  int max_displacement = 0;
  std::optional<VertexId> witness;
  std::size_t violations = 0;
};

// For each pair in Min(h), the largest displacement over the Euclidean geodesic.
ProximityReport check_min_proximity(const FlagComplex& c, const Isometry& h,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs);

// Bi-infinite h-invariant path through x built from one nearest-line geodesic
// from x to h x, truncated to `length` edges. NotTranslationLike unless h is
// a nonzero translation.
std::vector<AxialCoord> invariant_geodesic_on_plane(const PlaneIsometry& h, AxialCoord x, int length);

// Largest squared Euclidean distance from the path's vertices to the line
// through embed(x) and embed(h x); exact.
ExactScalar squared_axis_deviation(const PlaneIsometry& h, AxialCoord x, const std::vector<AxialCoord>& path);

struct AxisApprox {
  VertexPath segment;
  int K = 0;  // max displacement along the segment
  int n = 0;
  int stride = 1;
  std::vector<VertexPath> family;  // selected geodesics between h^-m x and h^m x
};

// Longest vertex run common to every member of the family, m = stride, 2 stride, ..., <= n.
// NoStableSegment when the family shares no vertex.
AxisApprox central_good_geodesic(const FlagComplex& c, const Isometry& h, VertexId x, int n, int stride = 1);

struct ConvergenceReport {
  std::vector<int> distances;  // d(h^m x, orbit of the segment), m = 1..n_max
  int base = 0;                // d(x, orbit of the segment)
  int radius = 0;              // measured max distance from disp_K to the orbit
  bool bounded = true;         // every distance <= base + radius
};

ConvergenceReport convergence_diagnostic(const FlagComplex& c, const Isometry& h, VertexId x,
                                         const AxisApprox& gamma, int n_max);

}  // namespace syslab
