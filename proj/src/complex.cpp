#include "syslab/complex.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "syslab/error.hpp"

namespace syslab {

Simplex::Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw Error(ErrorCode::InvalidArgument, "empty simplex");
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw Error(ErrorCode::InvalidArgument, "duplicate vertex in simplex");
}

bool Simplex::contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::contains(const Simplex& other) const {
  return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

FlagComplex::FlagComplex(std::string name, std::vector<std::vector<VertexId>> adjacency,
                         std::vector<GeneratorKey> keys, std::vector<int> margins, bool plane_backed)
    : name_(std::move(name)), adj_(std::move(adjacency)), keys_(std::move(keys)), margins_(std::move(margins)),
      plane_(plane_backed) {
  if (keys_.size() != adj_.size()) throw Error(ErrorCode::InvalidArgument, "key count differs from vertex count");
  if (!margins_.empty() && margins_.size() != adj_.size())
    throw Error(ErrorCode::InvalidArgument, "margin count differs from vertex count");
  std::size_t degree_sum = 0;
  for (std::uint32_t v = 0; v < adj_.size(); ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw Error(ErrorCode::InvalidArgument, "duplicate edge at vertex " + std::to_string(v));
    for (VertexId u : nb) {
      if (u.value >= adj_.size()) throw Error(ErrorCode::InvalidArgument, "edge to unknown vertex");
      if (u.value == v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(v));
    }
    degree_sum += nb.size();
    degree_bound_ = std::max<int>(degree_bound_, static_cast<int>(nb.size()));
  }
  for (std::uint32_t v = 0; v < adj_.size(); ++v)
    for (VertexId u : adj_[v])
      if (!std::binary_search(adj_[u.value].begin(), adj_[u.value].end(), VertexId{v}))
        throw Error(ErrorCode::InvalidArgument, "adjacency is not symmetric");
  edges_ = degree_sum / 2;
  for (std::uint32_t v = 0; v < keys_.size(); ++v)
    if (!index_.emplace(keys_[v], VertexId{v}).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate vertex key");
}

bool FlagComplex::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adj_.at(u.value);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> FlagComplex::find(const GeneratorKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AxialCoord FlagComplex::coord(VertexId v) const {
  if (!plane_) throw Error(ErrorCode::NotPlaneBacked, name_ + " has no lattice coordinates");
  const GeneratorKey& k = keys_.at(v.value);
  return {k[1], k[0]};
}

std::optional<VertexId> FlagComplex::vertex_at(AxialCoord c) const {
  if (!plane_) throw Error(ErrorCode::NotPlaneBacked, name_ + " has no lattice coordinates");
  return find({c.b, c.a, 0});
}

VertexId FlagComplex::at(AxialCoord c) const {
  auto v = vertex_at(c);
  if (!v) throw Error(ErrorCode::InvalidArgument, c.str() + " is not in " + name_);
  return *v;
}

std::string FlagComplex::label(VertexId v) const {
  if (plane_) return coord(v).str();
  const GeneratorKey& k = keys_.at(v.value);
  if (k[1] == 0 && k[2] == 0) return std::to_string(k[0]);
  return "[" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "]";
}

VertexId ComplexBuilder::add_vertex(const GeneratorKey& key) {
  auto [it, fresh] = index_.emplace(key, VertexId{static_cast<std::uint32_t>(keys_.size())});
  if (fresh) {
    keys_.push_back(key);
    adj_.emplace_back();
  }
  return it->second;
}

void ComplexBuilder::add_edge(VertexId u, VertexId v) {
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop");
  auto& nu = adj_.at(u.value);
  if (std::find(nu.begin(), nu.end(), v) != nu.end()) throw Error(ErrorCode::InvalidArgument, "duplicate edge");
  nu.push_back(v);
  adj_.at(v.value).push_back(u);
}

FlagComplex ComplexBuilder::build(std::string name, bool plane_backed) && {
  // renumber in key order so ids are independent of insertion order
  std::vector<std::uint32_t> order(keys_.size());
  std::uint32_t next = 0;
  std::vector<GeneratorKey> keys;
  keys.reserve(keys_.size());
  for (const auto& [key, id] : index_) {
    order[id.value] = next++;
    keys.push_back(key);
  }
  std::vector<std::vector<VertexId>> adj(keys_.size());
  for (std::uint32_t v = 0; v < adj_.size(); ++v)
    for (VertexId u : adj_[v]) adj[order[v]].push_back(VertexId{order[u.value]});
  return FlagComplex(std::move(name), std::move(adj), std::move(keys), {}, plane_backed);
}

FlagComplex materialize(const Generator& gen, const GeneratorKey& root, int radius) {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  std::map<GeneratorKey, int> depth{{root, 0}};
  std::deque<GeneratorKey> queue{root};
  while (!queue.empty()) {
    const GeneratorKey k = queue.front();
    queue.pop_front();
    const int dk = depth[k];
    if (dk == radius) continue;
    for (const GeneratorKey& n : gen.neighbors(k)) {
      if (depth.emplace(n, dk + 1).second) queue.push_back(n);
    }
  }
  std::vector<GeneratorKey> keys;
  std::vector<int> margins;
  std::map<GeneratorKey, std::uint32_t> id;
  for (const auto& [k, d] : depth) {
    id.emplace(k, static_cast<std::uint32_t>(keys.size()));
    keys.push_back(k);
    margins.push_back(radius - d);
  }
  std::vector<std::vector<VertexId>> adj(keys.size());
  for (std::uint32_t v = 0; v < keys.size(); ++v) {
    for (const GeneratorKey& n : gen.neighbors(keys[v])) {
      auto it = id.find(n);
      if (it != id.end()) adj[v].push_back(VertexId{it->second});
    }
  }
  return FlagComplex(gen.name(), std::move(adj), std::move(keys), std::move(margins), gen.plane_backed());
}

std::vector<int> bfs_distances(const FlagComplex& c, const std::vector<VertexId>& sources, int budget) {
  std::vector<int> dist(c.size(), -1);
  std::vector<VertexId> frontier;
  for (VertexId s : sources) {
    if (!c.contains(s)) throw Error(ErrorCode::InvalidArgument, "vertex not in complex");
    if (dist[s.value] != 0) {
      dist[s.value] = 0;
      frontier.push_back(s);
    }
  }
  std::vector<VertexId> next;
  for (int d = 1; d <= budget && !frontier.empty(); ++d) {
    next.clear();
    for (VertexId v : frontier)
      for (VertexId u : c.neighbors(v))
        if (dist[u.value] < 0) {
          dist[u.value] = d;
          next.push_back(u);
        }
    frontier.swap(next);
  }
  return dist;
}

std::vector<int> bfs_distances(const FlagComplex& c, VertexId source, int budget) {
  return bfs_distances(c, std::vector<VertexId>{source}, budget);
}

bool margin_safe(const FlagComplex& c, VertexId x, VertexId y, int d) {
  const long long mx = c.margin(x), my = c.margin(y);
  return mx + my >= static_cast<long long>(d) - 1;
}

void require_margin_safe(const FlagComplex& c, VertexId x, VertexId y, int d) {
  if (!margin_safe(c, x, y, d))
    throw Error(ErrorCode::BoundaryUnsafe, "distance " + std::to_string(d) + " between " + c.label(x) + " and " +
                                               c.label(y) + " may be affected by the window boundary");
}

void require_interior(const FlagComplex& c, VertexId v) {
  if (c.margin(v) < 1)
    throw Error(ErrorCode::BoundaryUnsafe, "neighborhood of " + c.label(v) + " is cut by the window boundary");
}

int distance(const FlagComplex& c, VertexId x, VertexId y, int budget) {
  if (!c.contains(x) || !c.contains(y)) throw Error(ErrorCode::InvalidArgument, "vertex not in complex");
  int d = -1;
  if (x == y) {
    d = 0;
  } else {
    // bidirectional would be faster; single-source keeps the budget semantics obvious
    std::vector<int> dist(c.size(), -1);
    dist[x.value] = 0;
    std::vector<VertexId> frontier{x}, next;
    for (int k = 1; k <= budget && !frontier.empty() && d < 0; ++k) {
      next.clear();
      for (VertexId v : frontier)
        for (VertexId u : c.neighbors(v))
          if (dist[u.value] < 0) {
            dist[u.value] = k;
            next.push_back(u);
            if (u == y) d = k;
          }
      frontier.swap(next);
    }
  }
  if (d < 0)
    throw Error(ErrorCode::Unreachable, c.label(y) + " not reached from " + c.label(x) + " within " +
                                            std::to_string(budget) + " steps");
  require_margin_safe(c, x, y, d);
  return d;
}

std::vector<VertexId> interval(const FlagComplex& c, VertexId x, VertexId y, int budget) {
  const int d = distance(c, x, y, budget);
  const auto dx = bfs_distances(c, x, d);
  const auto dy = bfs_distances(c, y, d);
  std::vector<VertexId> out;
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == d) out.push_back(VertexId{v});
  return out;
}

bool is_convex(const FlagComplex& c, const std::vector<VertexId>& set, int radius_cap) {
  std::vector<char> in(c.size(), 0);
  for (VertexId v : set) in.at(v.value) = 1;
  std::vector<std::vector<int>> dist;
  dist.reserve(set.size());
  for (VertexId v : set) dist.push_back(bfs_distances(c, v, radius_cap));
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const int d = dist[i][set[j].value];
      if (d < 0)
        throw Error(ErrorCode::Unreachable, c.label(set[j]) + " farther than " + std::to_string(radius_cap) +
                                                " from " + c.label(set[i]));
      require_margin_safe(c, set[i], set[j], d);
      for (std::uint32_t v = 0; v < c.size(); ++v)
        if (!in[v] && dist[i][v] >= 0 && dist[j][v] >= 0 && dist[i][v] + dist[j][v] == d) return false;
    }
  }
  return true;
}

std::vector<VertexId> ball(const FlagComplex& c, VertexId center, int radius) {
  const auto dist = bfs_distances(c, center, radius);
  std::vector<VertexId> out;
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (dist[v] >= 0) out.push_back(VertexId{v});
  return out;
}

std::vector<VertexId> sphere(const FlagComplex& c, VertexId center, int radius) {
  const auto dist = bfs_distances(c, center, radius);
  std::vector<VertexId> out;
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (dist[v] == radius) out.push_back(VertexId{v});
  return out;
}

bool is_clique(const FlagComplex& c, const std::vector<VertexId>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!c.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

Simplex span(const FlagComplex& c, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw Error(ErrorCode::NotASimplex, "empty vertex set");
  for (VertexId v : vertices)
    if (!c.contains(v)) throw Error(ErrorCode::NotASimplex, "vertex not in complex");
  if (!is_clique(c, vertices)) {
    std::string list;
    for (VertexId v : vertices) list += " " + c.label(v);
    throw Error(ErrorCode::NotASimplex, "vertices not pairwise adjacent:" + list);
  }
  return Simplex(std::move(vertices));
}

std::vector<VertexId> common_neighbors(const FlagComplex& c, const std::vector<VertexId>& s) {
  if (s.empty()) return {};
  // start from the smallest neighbor list
  auto smallest = std::min_element(s.begin(), s.end(), [&](VertexId l, VertexId r) {
    return c.neighbors(l).size() < c.neighbors(r).size();
  });
  std::vector<VertexId> out;
  for (VertexId u : c.neighbors(*smallest)) {
    bool all = true;
    for (VertexId v : s)
      if (v != *smallest && (u == v || !c.adjacent(u, v))) {
        all = false;
        break;
      }
    if (all && std::find(s.begin(), s.end(), u) == s.end()) out.push_back(u);
  }
  return out;
}

std::vector<VertexId> residue(const FlagComplex& c, const Simplex& s) {
  span(c, s.vertices());
  bool complete = false;
  for (VertexId v : s) complete = complete || c.margin(v) >= 1;
  if (!complete) require_interior(c, s.front());
  std::vector<VertexId> out = common_neighbors(c, s.vertices());
  out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_geodesic(const FlagComplex& c, const std::vector<VertexId>& path) {
  const int n = static_cast<int>(path.size());
  for (int i = 0; i < n; ++i) {
    const auto dist = bfs_distances(c, path[i], n);
    for (int j = i + 1; j < n; ++j) {
      if (dist[path[j].value] != j - i) return false;
      require_margin_safe(c, path[i], path[j], j - i);
    }
  }
  return true;
}

namespace {

// Every vertex of the subset has exactly two neighbors inside it; for four or
// five vertices this is exactly an induced cycle.
bool induced_cycle(const FlagComplex& c, const std::vector<VertexId>& subset) {
  for (VertexId u : subset) {
    int deg = 0;
    for (VertexId v : subset)
      if (u != v && c.adjacent(u, v)) ++deg;
    if (deg != 2) return false;
  }
  return true;
}

std::vector<VertexId> cycle_order(const FlagComplex& c, std::vector<VertexId> subset) {
  std::vector<VertexId> cyc{subset.front()};
  std::vector<char> used(subset.size(), 0);
  used[0] = 1;
  while (cyc.size() < subset.size()) {
    for (std::size_t i = 0; i < subset.size(); ++i)
      if (!used[i] && c.adjacent(cyc.back(), subset[i])) {
        used[i] = 1;
        cyc.push_back(subset[i]);
        break;
      }
  }
  return cyc;
}

bool scan_subsets(const FlagComplex& c, const std::vector<VertexId>& link, std::size_t k, std::size_t start,
                  std::vector<VertexId>& cur, std::vector<VertexId>& witness) {
  if (cur.size() == k) {
    if (induced_cycle(c, cur)) {
      witness = cycle_order(c, cur);
      return true;
    }
    return false;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= link.size(); ++i) {
    // prune: a new vertex needs at most two neighbors among those chosen
    int deg = 0;
    for (VertexId v : cur) deg += c.adjacent(link[i], v) ? 1 : 0;
    if (deg > 2) continue;
    cur.push_back(link[i]);
    if (scan_subsets(c, link, k, i + 1, cur, witness)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

SixLargeReport check_local_6_large(const FlagComplex& c) {
  SixLargeReport report;
  for (std::uint32_t v = 0; v < c.size(); ++v) {
    ++report.vertices_checked;
    const auto& link = c.neighbors(VertexId{v});
    for (std::size_t k : {4u, 5u}) {
      std::vector<VertexId> cur;
      std::vector<VertexId> witness;
      if (scan_subsets(c, link, k, 0, cur, witness)) {
        report.pass = false;
        report.center = VertexId{v};
        report.witness = std::move(witness);
        return report;
      }
    }
  }
  return report;
}

FlagComplex parse_complex(std::istream& in, const std::string& name) {
  std::string line;
  bool header = false;
  ComplexBuilder builder;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!header) {
      std::string version;
      ls >> version;
      if (first != "flagcomplex" || version != "v1")
        throw Error(ErrorCode::ParseError, name + ":" + std::to_string(lineno) + ": expected 'flagcomplex v1'");
      header = true;
      continue;
    }
    auto parse_id = [&](const std::string& tok) -> std::int64_t {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0)
        throw Error(ErrorCode::ParseError, name + ":" + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
      return v;
    };
    const std::int64_t u = parse_id(first);
    std::string second, extra;
    if (!(ls >> second)) {
      builder.add_vertex({u, 0, 0});
      continue;
    }
    if (ls >> extra) throw Error(ErrorCode::ParseError, name + ":" + std::to_string(lineno) + ": trailing tokens");
    const std::int64_t v = parse_id(second);
    if (u == v) throw Error(ErrorCode::ParseError, name + ":" + std::to_string(lineno) + ": self-loop");
    const VertexId a = builder.add_vertex({u, 0, 0});
    const VertexId b = builder.add_vertex({v, 0, 0});
    try {
      builder.add_edge(a, b);
    } catch (const Error&) {
      throw Error(ErrorCode::ParseError, name + ":" + std::to_string(lineno) + ": duplicate edge");
    }
  }
  if (!header) throw Error(ErrorCode::ParseError, name + ": missing 'flagcomplex v1' header");
  return std::move(builder).build(name);
}

FlagComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_complex(in, path);
}

std::string format_complex(const FlagComplex& c) {
  std::ostringstream os;
  os << "flagcomplex v1\n";
  for (std::uint32_t v = 0; v < c.size(); ++v) {
    if (c.neighbors(VertexId{v}).empty()) os << c.label(VertexId{v}) << "\n";
    for (VertexId u : c.neighbors(VertexId{v}))
      if (u.value > v) os << c.label(VertexId{v}) << " " << c.label(u) << "\n";
  }
  return os.str();
}

}  // namespace syslab
