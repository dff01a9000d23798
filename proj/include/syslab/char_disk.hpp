#pragma once

// Characteristic surfaces of thick intervals, restricted to regions that can be
// verified flat, plus an exhaustive minimal-filling search for tiny cycles.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "syslab/directed.hpp"

namespace syslab {

struct BoundaryCycle {
  ThickInterval interval;
  std::vector<VertexId> s;  // s[i - j] in sigma_i
  std::vector<VertexId> t;  // t[i - j] in tau_i
  // (s_j, ..., s_k, t_k, ..., t_j); closing edge t_j s_j implied
  std::vector<VertexId> cycle() const;
};

// Lexicographically least selection of thickness-realizing pairs with
// adjacent consecutive choices; backtracks before giving up.
BoundaryCycle boundary_cycle(const FlagComplex& c, const LayerProfile& p, const ThickInterval& iv);

// Every admissible selection, in lexicographic order, at most `limit` of them.
std::vector<BoundaryCycle> all_boundary_cycles(const FlagComplex& c, const LayerProfile& p, const ThickInterval& iv,
                                               std::size_t limit = 64);

// A vertex of the disk: position p along the layer segment v_i w_i (p = 0 is v_i).
struct DiskVertex {
  int layer = 0;
  int pos = 0;
  friend auto operator<=>(const DiskVertex&, const DiskVertex&) = default;
};

struct CharDisk {
  ThickInterval interval;
  std::vector<int> lengths;                        // |v_i w_i| per layer, index i - j
  std::vector<std::vector<AxialCoord>> coords;     // developed position of (i, p)
  std::vector<std::array<DiskVertex, 3>> triangles;
  // surfaces[m][i - j][p] is the image of (i, p) under the m-th characteristic surface
  std::vector<std::vector<std::vector<VertexId>>> surfaces;
  bool plane_coordinates = false;  // coords are the ambient lattice coordinates

  int j() const { return interval.j; }
  int k() const { return interval.k; }
  int vertex_count() const;
  AxialCoord coord(DiskVertex v) const { return coords.at(v.layer - interval.j).at(v.pos); }
  DiskVertex v(int i) const { return {i, 0}; }
  DiskVertex w(int i) const { return {i, lengths.at(i - interval.j)}; }
  bool contains(DiskVertex v) const;
  bool adjacent(DiskVertex a, DiskVertex b) const;
};

// Flat region enclosed by the cycle with the identity surface map. NotFlat when
// the region fails any disk, flatness, or isometric-embedding check.
CharDisk extract_flat_disk(const FlagComplex& c, const BoundaryCycle& cycle);

// Plane disk given by its layer segments v_i w_i directly, without any surface.
// Segments must be parallel lattice lines with consecutive ends adjacent.
CharDisk layered_disk(const ThickInterval& iv, const std::vector<AxialCoord>& v, const std::vector<AxialCoord>& w);

// Disk for the interval with one surface per admissible boundary cycle.
CharDisk characteristic_disk(const FlagComplex& c, const LayerProfile& p, const ThickInterval& iv);

// Span of the images of rho under all stored surfaces.
Simplex characteristic_map(const FlagComplex& c, const CharDisk& d, const std::vector<DiskVertex>& rho);

struct MinDisk {
  int triangles = 0;
  std::vector<std::array<VertexId, 3>> faces;
  std::uint64_t nodes = 0;
};

// Least number of nondegenerate triangles in a simplicial disk whose boundary
// maps isomorphically onto the cycle. Timeout past node_limit; NoFilling when
// no disk with at most max_triangles exists.
MinDisk brute_force_min_disk(const FlagComplex& c, const std::vector<VertexId>& cycle, int max_triangles,
                             std::uint64_t node_limit = 5'000'000);

}  // namespace syslab
