#pragma once

// Flag simplicial complexes stored as graphs. Simplices are cliques and are
// never listed explicitly. A complex is either finite (every margin unbounded)
// or a materialized window of an infinite generator, in which case every
// vertex carries its hop distance to the window boundary.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syslab/lattice.hpp"

namespace syslab {

struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline constexpr int kUnboundedMargin = std::numeric_limits<int>::max() / 4;

using GeneratorKey = std::array<std::int64_t, 3>;

class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<VertexId> vertices);
  static Simplex vertex(VertexId v) { return Simplex(std::vector<VertexId>{v}); }

  const std::vector<VertexId>& vertices() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }
  VertexId front() const { return v_.front(); }
  bool contains(VertexId v) const;
  bool contains(const Simplex& other) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexId> v_;
};

class FlagComplex {
 public:
  FlagComplex() = default;
  // adjacency lists are sorted and validated; margins empty means finite
  FlagComplex(std::string name, std::vector<std::vector<VertexId>> adjacency, std::vector<GeneratorKey> keys,
              std::vector<int> margins, bool plane_backed);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  int degree_bound() const noexcept { return degree_bound_; }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v.value); }
  bool adjacent(VertexId u, VertexId v) const;
  bool contains(VertexId v) const noexcept { return v.value < adj_.size(); }

  int margin(VertexId v) const { return margins_.empty() ? kUnboundedMargin : margins_.at(v.value); }
  bool is_window() const noexcept { return !margins_.empty(); }

  const GeneratorKey& key(VertexId v) const { return keys_.at(v.value); }
  std::optional<VertexId> find(const GeneratorKey& key) const;

  bool plane_backed() const noexcept { return plane_; }
  AxialCoord coord(VertexId v) const;
  std::optional<VertexId> vertex_at(AxialCoord c) const;
  VertexId at(AxialCoord c) const;  // throws InvalidArgument when absent

  std::string label(VertexId v) const;

 private:
  std::string name_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<GeneratorKey> keys_;
  std::map<GeneratorKey, VertexId> index_;
  std::vector<int> margins_;
  bool plane_ = false;
  std::size_t edges_ = 0;
  int degree_bound_ = 0;
};

// Collects vertices by key and edges, then freezes into a FlagComplex.
class ComplexBuilder {
 public:
  VertexId add_vertex(const GeneratorKey& key);
  void add_edge(VertexId u, VertexId v);  // rejects loops and duplicates
  std::size_t size() const noexcept { return keys_.size(); }
  FlagComplex build(std::string name, bool plane_backed = false) &&;

 private:
  std::vector<GeneratorKey> keys_;
  std::map<GeneratorKey, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
};

// Neighbor function of an implicit, uniformly locally finite complex.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual std::string name() const = 0;
  virtual std::vector<GeneratorKey> neighbors(const GeneratorKey& key) const = 0;
  virtual int degree_bound() const = 0;
  virtual bool plane_backed() const { return false; }
};

// Ball of the given radius around root; vertex ids follow key order.
FlagComplex materialize(const Generator& gen, const GeneratorKey& root, int radius);

// Hop distances from a source, -1 beyond budget or unreachable.
std::vector<int> bfs_distances(const FlagComplex& c, VertexId source, int budget);
std::vector<int> bfs_distances(const FlagComplex& c, const std::vector<VertexId>& sources, int budget);

// True when truncation of the window cannot have changed a computed distance d
// between x and y: a true geodesic of length <= d stays inside the window
// whenever margin(x) + margin(y) >= d - 1.
bool margin_safe(const FlagComplex& c, VertexId x, VertexId y, int d);
void require_margin_safe(const FlagComplex& c, VertexId x, VertexId y, int d);
// Local queries (neighbors of v) are complete when margin(v) >= 1.
void require_interior(const FlagComplex& c, VertexId v);

int distance(const FlagComplex& c, VertexId x, VertexId y, int budget);

std::vector<VertexId> interval(const FlagComplex& c, VertexId x, VertexId y, int budget = 1 << 20);

bool is_convex(const FlagComplex& c, const std::vector<VertexId>& set, int radius_cap);

std::vector<VertexId> ball(const FlagComplex& c, VertexId center, int radius);
std::vector<VertexId> sphere(const FlagComplex& c, VertexId center, int radius);

bool is_clique(const FlagComplex& c, const std::vector<VertexId>& vertices);
// Sorts, dedups and checks pairwise adjacency; NotASimplex otherwise.
Simplex span(const FlagComplex& c, std::vector<VertexId> vertices);

std::vector<VertexId> residue(const FlagComplex& c, const Simplex& s);

// Vertices adjacent to every vertex of s, excluding s itself.
std::vector<VertexId> common_neighbors(const FlagComplex& c, const std::vector<VertexId>& s);

bool is_geodesic(const FlagComplex& c, const std::vector<VertexId>& path);

struct SixLargeReport {
  bool pass = true;
  std::size_t vertices_checked = 0;
  std::optional<VertexId> center;
  std::vector<VertexId> witness;  // induced 4- or 5-cycle in the link of center
};

SixLargeReport check_local_6_large(const FlagComplex& c);

// `flagcomplex v1` text format; a line with a single id declares an isolated vertex.
FlagComplex parse_complex(std::istream& in, const std::string& name);
FlagComplex load_complex(const std::string& path);
std::string format_complex(const FlagComplex& c);

}  // namespace syslab
