#pragma once

// The shrunken disk between the half-way points of the layer segments, shortest
// paths inside it, and the diagonal read off where such a path crosses layers.

#include <vector>

#include "syslab/char_disk.hpp"
#include "syslab/exact.hpp"

namespace syslab {

// Closed polygon, vertices in boundary order. Zero area is allowed (degenerate).
struct PolygonDomain {
  std::vector<PlanePoint> boundary;
  bool degenerate = false;
};

// DegenerateDomain when the boundary self-intersects; fewer than two distinct points too.
PolygonDomain polygon_domain(std::vector<PlanePoint> boundary);

bool contains(const PolygonDomain& dom, const PlanePoint& p);  // closed domain
// The closed segment pq lies in the closed domain.
bool visible(const PolygonDomain& dom, const PlanePoint& p, const PlanePoint& q);

struct ModifiedDisk {
  ThickInterval interval;
  std::vector<PlanePoint> v, w;                // embedded v_i, w_i, index i - j
  std::vector<PlanePoint> v_prime, w_prime;    // half a unit in from each end
  PolygonDomain domain;
  PlanePoint start() const { return v_prime.front(); }
  PlanePoint end() const { return v_prime.back(); }
};

ModifiedDisk modified_disk(const CharDisk& d);

struct PolyPath {
  std::vector<PlanePoint> points;
  double length = 0;
};

inline constexpr double kLengthTolerance = 1e-9;

// Shortest path in the intrinsic metric via the visibility graph of the
// boundary vertices. OutsideDomain if either endpoint is outside.
PolyPath shortest_path(const PolygonDomain& dom, const PlanePoint& from, const PlanePoint& to);

struct Diagonal {
  ThickInterval interval;
  std::vector<std::vector<DiskVertex>> rho;  // one vertex or one edge per layer j < i < k
  std::vector<PlanePoint> crossing;          // where the path meets layer i
  int coincident_crossings = 0;              // layers met at more than one point
  const std::vector<DiskVertex>& at(int i) const { return rho.at(i - interval.j - 1); }
};

// Disk positions nearest to u along a layer segment: {floor} or {ceil}, or
// both when u is exactly half-way.
std::vector<int> nearest_positions(const ExactScalar& u);

// NoCrossing if the path misses a layer segment; ConditionViolated if the
// result breaks the adjacency conditions.
Diagonal euclidean_diagonal(const CharDisk& d, const PolyPath& alpha);
Diagonal euclidean_diagonal(const CharDisk& d);

}  // namespace syslab
