#include "syslab/char_disk.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "syslab/error.hpp"

namespace syslab {

std::vector<VertexId> BoundaryCycle::cycle() const {
  std::vector<VertexId> out(s.begin(), s.end());
  out.insert(out.end(), t.rbegin(), t.rend());
  return out;
}

namespace {

void check_interval(const LayerProfile& p, const ThickInterval& iv) {
  const auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::PreconditionViolated,
                "(" + std::to_string(iv.j) + "," + std::to_string(iv.k) + ") is not a thick interval: " + why);
  };
  if (iv.j < 1 || iv.k > p.n - 1 || iv.k - iv.j < 2) bad("indices out of range");
  if (!p.layers[iv.j].thin || !p.layers[iv.k].thin) bad("end layers must be thin");
  for (int i = iv.j + 1; i < iv.k; ++i)
    if (p.layers[i].thin) bad("layer " + std::to_string(i) + " is thin");
}

using Pair = std::pair<VertexId, VertexId>;

std::vector<std::vector<Pair>> realizing_pairs(const FlagComplex& c, const LayerProfile& p, const ThickInterval& iv) {
  std::vector<std::vector<Pair>> out;
  for (int i = iv.j; i <= iv.k; ++i) {
    const Layer& L = p.layers[i];
    std::vector<Pair> pairs;
    for (VertexId s : L.sigma) {
      const auto ds = bfs_distances(c, s, L.thickness);
      for (VertexId t : L.tau)
        if (ds[t.value] == L.thickness) pairs.push_back({s, t});
    }
    std::sort(pairs.begin(), pairs.end());
    out.push_back(std::move(pairs));
  }
  return out;
}

void enumerate_cycles(const FlagComplex& c, const ThickInterval& iv, const std::vector<std::vector<Pair>>& pairs,
                      std::vector<Pair>& cur, std::vector<BoundaryCycle>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  const std::size_t idx = cur.size();
  if (idx == pairs.size()) {
    BoundaryCycle bc{iv, {}, {}};
    for (const Pair& pr : cur) {
      bc.s.push_back(pr.first);
      bc.t.push_back(pr.second);
    }
    out.push_back(std::move(bc));
    return;
  }
  for (const Pair& pr : pairs[idx]) {
    if ((idx == 0 || idx + 1 == pairs.size()) && pr.first == pr.second) continue;
    if (idx > 0 && !(c.adjacent(cur.back().first, pr.first) && c.adjacent(cur.back().second, pr.second))) continue;
    cur.push_back(pr);
    enumerate_cycles(c, iv, pairs, cur, out, limit);
    cur.pop_back();
    if (out.size() >= limit) return;
  }
}

}  // namespace

std::vector<BoundaryCycle> all_boundary_cycles(const FlagComplex& c, const LayerProfile& p, const ThickInterval& iv,
                                               std::size_t limit) {
  check_interval(p, iv);
  const auto pairs = realizing_pairs(c, p, iv);
  std::vector<BoundaryCycle> out;
  std::vector<Pair> cur;
  enumerate_cycles(c, iv, pairs, cur, out, limit);
  return out;
}

BoundaryCycle boundary_cycle(const FlagComplex& c, const LayerProfile& p, const ThickInterval& iv) {
  auto all = all_boundary_cycles(c, p, iv, 1);
  if (all.empty())
    throw Error(ErrorCode::NoRealizingChain, "no chain of thickness-realizing pairs over (" + std::to_string(iv.j) +
                                                 "," + std::to_string(iv.k) + ")");
  return std::move(all.front());
}

int CharDisk::vertex_count() const {
  int n = 0;
  for (int len : lengths) n += len + 1;
  return n;
}

bool CharDisk::contains(DiskVertex v) const {
  return v.layer >= interval.j && v.layer <= interval.k && v.pos >= 0 && v.pos <= lengths.at(v.layer - interval.j);
}

bool CharDisk::adjacent(DiskVertex a, DiskVertex b) const {
  return contains(a) && contains(b) && lattice_adjacent(coord(a), coord(b));
}

namespace {

[[noreturn]] void not_flat(const std::string& why) { throw Error(ErrorCode::NotFlat, why); }

using Tri = std::array<VertexId, 3>;

// Developed lattice positions of the region by unfolding triangles across edges.
std::map<VertexId, AxialCoord> develop(const std::vector<Tri>& tris, const std::map<std::pair<VertexId, VertexId>, std::vector<int>>& edge_tris,
                                       const Tri& seed) {
  std::map<VertexId, AxialCoord> pos{{seed[0], {0, 0}}, {seed[1], {1, 0}}, {seed[2], {0, 1}}};
  std::vector<char> done(tris.size(), 0);
  std::deque<int> queue;
  for (std::size_t f = 0; f < tris.size(); ++f)
    if (tris[f] == seed) {
      done[f] = 1;
      queue.push_back(static_cast<int>(f));
    }
  while (!queue.empty()) {
    const Tri& t = tris[queue.front()];
    queue.pop_front();
    for (int e = 0; e < 3; ++e) {
      const VertexId a = t[e], b = t[(e + 1) % 3], z = t[(e + 2) % 3];
      for (int g : edge_tris.at(std::minmax(a, b))) {
        if (done[g]) continue;
        VertexId u{};
        for (VertexId v : tris[g])
          if (v != a && v != b) u = v;
        const AxialCoord image = pos.at(a) + pos.at(b) - pos.at(z);
        auto [it, fresh] = pos.emplace(u, image);
        if (!fresh && it->second != image) not_flat("developing map is inconsistent around a vertex");
        done[g] = 1;
        queue.push_back(g);
      }
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end()) not_flat("region triangles are not edge-connected");
  return pos;
}

}  // namespace

CharDisk extract_flat_disk(const FlagComplex& c, const BoundaryCycle& cycle) {
  const ThickInterval iv = cycle.interval;
  const int layers_n = iv.k - iv.j + 1;
  if (iv.k - iv.j < 2 || static_cast<int>(cycle.s.size()) != layers_n || static_cast<int>(cycle.t.size()) != layers_n)
    throw Error(ErrorCode::PreconditionViolated, "boundary cycles of thick intervals have length at least 6");
  const std::vector<VertexId> gamma = cycle.cycle();
  if (std::set<VertexId>(gamma.begin(), gamma.end()).size() != gamma.size())
    throw Error(ErrorCode::PreconditionViolated, "boundary cycle is not embedded");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!c.adjacent(gamma[i], gamma[(i + 1) % gamma.size()]))
      throw Error(ErrorCode::PreconditionViolated, "consecutive cycle vertices are not adjacent");

  CharDisk d;
  d.interval = iv;
  d.surfaces.emplace_back();
  auto& surface = d.surfaces.back();
  std::map<VertexId, DiskVertex> where;
  for (int r = 0; r < layers_n; ++r) {
    const VertexId s = cycle.s[r], t = cycle.t[r];
    const int len = distance(c, s, t, 2 * layers_n + 2 * iv.k);
    const auto ds = bfs_distances(c, s, len);
    const auto dt = bfs_distances(c, t, len);
    std::vector<VertexId> seg(len + 1);
    std::vector<int> count(len + 1, 0);
    for (std::uint32_t v = 0; v < c.size(); ++v)
      if (ds[v] >= 0 && dt[v] >= 0 && ds[v] + dt[v] == len) {
        seg[ds[v]] = VertexId{v};
        ++count[ds[v]];
      }
    for (int q = 0; q <= len; ++q)
      if (count[q] != 1)
        not_flat("geodesic between " + c.label(s) + " and " + c.label(t) + " is not unique");
    for (int q = 0; q <= len; ++q)
      if (!where.emplace(seg[q], DiskVertex{iv.j + r, q}).second)
        not_flat(c.label(seg[q]) + " lies on two layer segments");
    d.lengths.push_back(len);
    surface.push_back(std::move(seg));
  }
  if (d.lengths.front() != 1 || d.lengths.back() != 1) not_flat("end layers of the disk must be single edges");

  // induced edges and triangles of the region
  std::vector<VertexId> region;
  for (const auto& [v, dv] : where) region.push_back(v);
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> edge_tris;
  std::vector<Tri> tris;
  for (std::size_t a = 0; a < region.size(); ++a)
    for (std::size_t b = a + 1; b < region.size(); ++b) {
      if (!c.adjacent(region[a], region[b])) continue;
      edge_tris[{region[a], region[b]}];
      for (std::size_t e = b + 1; e < region.size(); ++e)
        if (c.adjacent(region[a], region[e]) && c.adjacent(region[b], region[e]))
          tris.push_back({region[a], region[b], region[e]});
    }
  for (std::size_t f = 0; f < tris.size(); ++f) {
    const Tri& t = tris[f];
    for (int e = 0; e < 3; ++e) edge_tris[std::minmax(t[e], t[(e + 1) % 3])].push_back(static_cast<int>(f));
  }
  std::set<std::pair<VertexId, VertexId>> boundary;
  for (std::size_t i = 0; i < gamma.size(); ++i) boundary.insert(std::minmax(gamma[i], gamma[(i + 1) % gamma.size()]));
  for (const auto& [edge, fs] : edge_tris) {
    if (fs.empty() || fs.size() > 2)
      not_flat("edge " + c.label(edge.first) + "-" + c.label(edge.second) + " lies in " + std::to_string(fs.size()) +
               " triangles of the region");
    if ((fs.size() == 1) != (boundary.count(edge) == 1))
      not_flat("edge " + c.label(edge.first) + "-" + c.label(edge.second) + " breaks the boundary cycle");
  }
  const long euler = static_cast<long>(region.size()) - static_cast<long>(edge_tris.size()) + static_cast<long>(tris.size());
  if (euler != 1) not_flat("region has Euler characteristic " + std::to_string(euler));

  // links: a 6-cycle at interior vertices, a path at boundary vertices
  const std::set<VertexId> on_cycle(gamma.begin(), gamma.end());
  for (VertexId v : region) {
    std::map<VertexId, std::vector<VertexId>> link;
    for (const Tri& t : tris) {
      if (std::find(t.begin(), t.end(), v) == t.end()) continue;
      std::vector<VertexId> other;
      for (VertexId u : t)
        if (u != v) other.push_back(u);
      link[other[0]].push_back(other[1]);
      link[other[1]].push_back(other[0]);
    }
    int ends = 0;
    for (const auto& [u, nb] : link) {
      if (nb.size() > 2) not_flat("link of " + c.label(v) + " branches");
      if (nb.size() == 1) ++ends;
    }
    const bool interior = on_cycle.count(v) == 0;
    if (interior && (ends != 0 || link.size() != 6))
      not_flat("interior vertex " + c.label(v) + " is not surrounded by exactly six triangles");
    if (!interior && ends != 2) not_flat("boundary vertex " + c.label(v) + " does not have a path link");
    // connectedness of the link
    std::set<VertexId> seen;
    std::vector<VertexId> stack{link.begin()->first};
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      if (!seen.insert(u).second) continue;
      for (VertexId n : link[u]) stack.push_back(n);
    }
    if (seen.size() != link.size()) not_flat("link of " + c.label(v) + " is disconnected");
  }

  // developing map into the plane
  std::map<VertexId, AxialCoord> pos;
  if (c.plane_backed()) {
    d.plane_coordinates = true;
    for (VertexId v : region) pos[v] = c.coord(v);
  } else {
    const auto& seed_faces = edge_tris.at(std::minmax(cycle.s.front(), cycle.t.front()));
    Tri seed = tris.at(seed_faces.front());
    // orient the seed as (s_j, t_j, third)
    VertexId third{};
    for (VertexId u : seed)
      if (u != cycle.s.front() && u != cycle.t.front()) third = u;
    seed = {cycle.s.front(), cycle.t.front(), third};
    for (Tri& t : tris) std::sort(t.begin(), t.end());
    auto canon = seed;
    std::sort(canon.begin(), canon.end());
    pos = develop(tris, edge_tris, canon);
    // re-seed so that s_j, t_j, third land on (0,0), (1,0), (0,1) regardless of id order
    const AxialCoord o = pos.at(seed[0]);
    std::map<VertexId, AxialCoord> shifted;
    for (auto& [v, p] : pos) shifted[v] = p - o;
    pos = std::move(shifted);
  }
  std::set<AxialCoord> images;
  for (const auto& [v, p] : pos)
    if (!images.insert(p).second) not_flat("developing map is not injective");

  // isometric: intrinsic distances in the region equal lattice distances
  std::map<VertexId, std::size_t> local;
  for (std::size_t i = 0; i < region.size(); ++i) local[region[i]] = i;
  for (std::size_t a = 0; a < region.size(); ++a) {
    std::vector<int> dist(region.size(), -1);
    dist[a] = 0;
    std::deque<std::size_t> q{a};
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (VertexId n : c.neighbors(region[u])) {
        auto it = local.find(n);
        if (it != local.end() && dist[it->second] < 0) {
          dist[it->second] = dist[u] + 1;
          q.push_back(it->second);
        }
      }
    }
    for (std::size_t b = 0; b < region.size(); ++b) {
      if (c.adjacent(region[a], region[b]) != lattice_adjacent(pos.at(region[a]), pos.at(region[b])))
        not_flat("adjacency of " + c.label(region[a]) + " and " + c.label(region[b]) + " differs from the plane");
      if (dist[b] != lattice_distance(pos.at(region[a]), pos.at(region[b])))
        not_flat("region is not isometric to its image in the plane");
    }
  }

  // layer segments straight and parallel
  std::optional<AxialCoord> step;
  for (const auto& seg : surface)
    for (std::size_t q = 0; q + 1 < seg.size(); ++q) {
      const AxialCoord st = pos.at(seg[q + 1]) - pos.at(seg[q]);
      if (step && *step != st) not_flat("layer segments are not parallel straight lines");
      step = st;
    }

  d.coords.resize(layers_n);
  for (int r = 0; r < layers_n; ++r)
    for (VertexId v : surface[r]) d.coords[r].push_back(pos.at(v));
  for (const Tri& t : tris) {
    std::array<DiskVertex, 3> f{where.at(t[0]), where.at(t[1]), where.at(t[2])};
    std::sort(f.begin(), f.end());
    d.triangles.push_back(f);
  }
  std::sort(d.triangles.begin(), d.triangles.end());
  return d;
}

CharDisk layered_disk(const ThickInterval& iv, const std::vector<AxialCoord>& v, const std::vector<AxialCoord>& w) {
  const int n = iv.k - iv.j + 1;
  if (n < 2 || static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "one segment per layer of the interval");
  CharDisk d;
  d.interval = iv;
  d.plane_coordinates = true;
  std::optional<AxialCoord> step;
  std::map<AxialCoord, DiskVertex> where;
  for (int r = 0; r < n; ++r) {
    if (r > 0 && (!lattice_adjacent(v[r - 1], v[r]) || !lattice_adjacent(w[r - 1], w[r])))
      throw Error(ErrorCode::InvalidArgument, "segment ends of consecutive layers must be adjacent");
    const AxialCoord diff = w[r] - v[r];
    const auto len = static_cast<int>(lattice_norm(diff));
    if (len == 0) throw Error(ErrorCode::InvalidArgument, "layer segments have positive length");
    const AxialCoord unit{diff.a / len, diff.b / len};
    if (len * unit != diff || lattice_norm(unit) != 1 || (step && *step != unit))
      throw Error(ErrorCode::InvalidArgument, "layer segments must lie on parallel lattice lines");
    step = unit;
    d.lengths.push_back(len);
    d.coords.emplace_back();
    for (int q = 0; q <= len; ++q) {
      d.coords.back().push_back(v[r] + q * unit);
      where[v[r] + q * unit] = {iv.j + r, q};
    }
  }
  for (const auto& [c, dv] : where)
    for (int e = 0; e < 6; ++e) {
      // each upward or downward triangle once, from its least vertex
      const AxialCoord b = c + kUnitSteps[e], t = c + kUnitSteps[(e + 1) % 6];
      if (!(c < b && c < t) || !where.count(b) || !where.count(t)) continue;
      std::array<DiskVertex, 3> f{dv, where[b], where[t]};
      std::sort(f.begin(), f.end());
      d.triangles.push_back(f);
    }
  std::sort(d.triangles.begin(), d.triangles.end());
  return d;
}

CharDisk characteristic_disk(const FlagComplex& c, const LayerProfile& p, const ThickInterval& iv) {
  const auto cycles = all_boundary_cycles(c, p, iv);
  if (cycles.empty())
    throw Error(ErrorCode::NoRealizingChain, "no chain of thickness-realizing pairs over (" + std::to_string(iv.j) +
                                                 "," + std::to_string(iv.k) + ")");
  CharDisk d = extract_flat_disk(c, cycles.front());
  for (std::size_t m = 1; m < cycles.size(); ++m) {
    CharDisk other = extract_flat_disk(c, cycles[m]);
    if (other.lengths != d.lengths || other.triangles != d.triangles)
      throw Error(ErrorCode::ConditionViolated, "characteristic disks of two boundary cycles are not isomorphic");
    d.surfaces.push_back(std::move(other.surfaces.front()));
  }
  return d;
}

Simplex characteristic_map(const FlagComplex& c, const CharDisk& d, const std::vector<DiskVertex>& rho) {
  if (rho.empty() || rho.size() > 3) throw Error(ErrorCode::NotASimplexOfDisk, "disk simplices have 1 to 3 vertices");
  for (std::size_t a = 0; a < rho.size(); ++a) {
    if (!d.contains(rho[a])) throw Error(ErrorCode::NotASimplexOfDisk, "vertex outside the disk");
    for (std::size_t b = a + 1; b < rho.size(); ++b)
      if (!d.adjacent(rho[a], rho[b])) throw Error(ErrorCode::NotASimplexOfDisk, "vertices not adjacent in the disk");
  }
  std::vector<VertexId> image;
  for (const auto& surface : d.surfaces)
    for (const DiskVertex& v : rho) image.push_back(surface.at(v.layer - d.j()).at(v.pos));
  return span(c, std::move(image));
}

namespace {

using Word = std::vector<VertexId>;
using Face = std::array<VertexId, 3>;

struct Fill {
  int area = 0;
  std::vector<Face> faces;
};

class FillingSearch {
 public:
  FillingSearch(const FlagComplex& c, std::uint64_t limit) : c_(c), limit_(limit) {}

  std::optional<Fill> solve(const Word& w, int budget) {
    const int m = static_cast<int>(w.size());
    if (m == 2) return Fill{};
    if (m - 2 > budget) return std::nullopt;
    const Word key = canonical(w);
    if (auto it = exact_.find(key); it != exact_.end()) {
      if (it->second.area <= budget) return it->second;
      return std::nullopt;
    }
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) return std::nullopt;
    if (++nodes_ > limit_) throw Error(ErrorCode::Timeout, "minimal disk search exceeded its node limit");

    std::optional<Fill> best;
    auto cap = [&] { return best ? best->area - 1 : budget; };
    const VertexId w0 = w[0], w1 = w[1];
    // third vertex on the boundary: split into two smaller disks
    for (int t = 2; t < m; ++t) {
      const VertexId z = w[t];
      if (z == w0 || z == w1 || !c_.adjacent(z, w0) || !c_.adjacent(z, w1)) continue;
      const Word a(w.begin() + 1, w.begin() + t + 1);
      Word b(w.begin() + t, w.end());
      b.push_back(w0);
      const int room = cap() - 1;
      const int lb_b = static_cast<int>(b.size()) - 2;
      if (room - lb_b < static_cast<int>(a.size()) - 2) continue;
      auto fa = solve(a, room - lb_b);
      if (!fa) continue;
      auto fb = solve(b, room - fa->area);
      if (!fb) continue;
      Fill f{1 + fa->area + fb->area, {{w0, w1, z}}};
      f.faces.insert(f.faces.end(), fa->faces.begin(), fa->faces.end());
      f.faces.insert(f.faces.end(), fb->faces.begin(), fb->faces.end());
      best = std::move(f);
    }
    // third vertex interior: the boundary grows by one
    for (VertexId z : common_neighbors(c_, {w0, w1})) {
      const int room = cap() - 1;
      if (room < m - 1) break;
      Word grown{w0, z};
      grown.insert(grown.end(), w.begin() + 1, w.end());
      auto fg = solve(grown, room);
      if (!fg) continue;
      Fill f{1 + fg->area, {{w0, w1, z}}};
      f.faces.insert(f.faces.end(), fg->faces.begin(), fg->faces.end());
      best = std::move(f);
    }
    if (best) {
      exact_[key] = *best;
      return best;
    }
    int& known = failed_[key];
    known = std::max(known, budget);
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static Word canonical(const Word& w) {
    Word best = w;
    Word r = w;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t s = 0; s < r.size(); ++s) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best) best = r;
      }
      std::reverse(r.begin(), r.end());
    }
    return best;
  }

  const FlagComplex& c_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::map<Word, Fill> exact_;
  std::map<Word, int> failed_;
};

}  // namespace

MinDisk brute_force_min_disk(const FlagComplex& c, const std::vector<VertexId>& cycle, int max_triangles,
                             std::uint64_t node_limit) {
  if (cycle.size() < 3) throw Error(ErrorCode::PreconditionViolated, "a cycle has at least three vertices");
  if (std::set<VertexId>(cycle.begin(), cycle.end()).size() != cycle.size())
    throw Error(ErrorCode::PreconditionViolated, "cycle is not embedded");
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!c.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
      throw Error(ErrorCode::PreconditionViolated, "consecutive cycle vertices are not adjacent");
  FillingSearch search(c, node_limit);
  for (int budget = static_cast<int>(cycle.size()) - 2; budget <= max_triangles; ++budget) {
    if (auto f = search.solve(cycle, budget)) return {f->area, f->faces, search.nodes()};
  }
  throw Error(ErrorCode::NoFilling, "no disk with at most " + std::to_string(max_triangles) + " triangles fills the cycle");
}

}  // namespace syslab
