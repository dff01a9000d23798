#include "syslab/directed.hpp"

#include <algorithm>

#include "syslab/error.hpp"

namespace syslab {

namespace {

std::string describe(const FlagComplex& c, const std::vector<VertexId>& s) {
  std::string out = "{";
  for (VertexId v : s) out += (out.size() > 1 ? "," : "") + c.label(v);
  return out + "}";
}

std::string describe(const FlagComplex& c, const Simplex& s) { return describe(c, s.vertices()); }

}  // namespace

DirectedGeodesic DirectedGeodesic::reindexed() const {
  DirectedGeodesic r{to, from, simplices, !reversed};
  std::reverse(r.simplices.begin(), r.simplices.end());
  return r;
}

std::string directed_conditions_failure(const FlagComplex& c, const std::vector<Simplex>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    std::vector<VertexId> joint(seq[i].begin(), seq[i].end());
    for (VertexId v : seq[i + 1]) {
      if (seq[i].contains(v)) return "simplices " + std::to_string(i) + " and " + std::to_string(i + 1) + " intersect";
      joint.push_back(v);
    }
    if (!is_clique(c, joint))
      return "simplices " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not span a simplex";
  }
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const std::vector<VertexId> res = residue(c, seq[i - 1]);
    std::vector<VertexId> meet;
    for (VertexId r : res) {
      bool near = false;
      for (VertexId v : seq[i + 1]) near = near || r == v || c.adjacent(r, v);
      if (near) meet.push_back(r);
    }
    if (meet != seq[i].vertices())
      return "Res(sigma_" + std::to_string(i - 1) + ") meets B_1(sigma_" + std::to_string(i + 1) + ") in " +
             describe(c, meet) + ", not " + describe(c, seq[i]);
  }
  return {};
}

DirectedGeodesic directed_geodesic(const FlagComplex& c, VertexId x, VertexId y) {
  const int n = distance(c, x, y, static_cast<int>(c.size()));
  const std::vector<int> dy = bfs_distances(c, y, n);
  DirectedGeodesic g{x, y, {Simplex::vertex(x)}, false};
  for (int i = 0; i < n; ++i) {
    const Simplex& cur = g.simplices.back();
    bool complete = false;
    for (VertexId v : cur) complete = complete || c.margin(v) >= 1;
    if (!complete) require_interior(c, cur.front());
    std::vector<VertexId> next;
    for (VertexId v : common_neighbors(c, cur.vertices()))
      if (dy[v.value] == n - i - 1) next.push_back(v);
    if (next.empty())
      throw Error(ErrorCode::ConstructionFailed, "no vertex of S_" + std::to_string(n - i - 1) + "(" + c.label(y) +
                                                     ") is adjacent to all of " + describe(c, cur));
    std::sort(next.begin(), next.end());
    if (!is_clique(c, next))
      throw Error(ErrorCode::ConstructionFailed, "projection of " + describe(c, cur) + " toward " + c.label(y) +
                                                     " is not a simplex");
    g.simplices.emplace_back(std::move(next));
  }
  if (g.simplices.back() != Simplex::vertex(y))
    throw Error(ErrorCode::ConstructionFailed, "sequence does not end at " + c.label(y));
  if (const std::string why = directed_conditions_failure(c, g.simplices); !why.empty())
    throw Error(ErrorCode::ConditionViolated, "directed geodesic " + c.label(x) + " -> " + c.label(y) + ": " + why);
  return g;
}

LayerProfile layers(const FlagComplex& c, VertexId x, VertexId y) {
  LayerProfile p;
  p.x = x;
  p.y = y;
  p.sigma = directed_geodesic(c, x, y);
  p.tau = directed_geodesic(c, y, x).reindexed();
  p.n = p.sigma.length();
  const int n = p.n;
  const std::vector<int> dx = bfs_distances(c, x, n);
  const std::vector<int> dy = bfs_distances(c, y, n);
  p.layers.resize(n + 1);
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == n) p.layers[dx[v]].vertices.push_back(VertexId{v});
  for (int i = 0; i <= n; ++i) {
    Layer& L = p.layers[i];
    L.index = i;
    L.sigma = p.sigma.simplices[i];
    L.tau = p.tau.simplices[i];
    for (const Simplex* s : {&L.sigma, &L.tau})
      for (VertexId v : *s)
        if (!std::binary_search(L.vertices.begin(), L.vertices.end(), v))
          throw Error(ErrorCode::ConditionViolated, c.label(v) + " of a directed geodesic is outside layer " +
                                                        std::to_string(i));
    // both ends lie in S_i(x) and S_{n-i}(y)
    const int cap = 2 * std::min(i, n - i);
    for (VertexId s : L.sigma) {
      const std::vector<int> ds = bfs_distances(c, s, cap);
      for (VertexId t : L.tau) {
        const int d = ds[t.value];
        if (d < 0) throw Error(ErrorCode::Unreachable, "layer vertices farther apart than " + std::to_string(cap));
        require_margin_safe(c, s, t, d);
        L.thickness = std::max(L.thickness, d);
      }
    }
    L.thin = L.thickness <= 1;
  }
  return p;
}

std::vector<ThickInterval> thick_intervals(const std::vector<bool>& thin) {
  const int n = static_cast<int>(thin.size()) - 1;
  std::vector<ThickInterval> out;
  if (n < 0) return out;
  for (int i : {0, 1, n - 1, n})
    if (i >= 0 && i <= n && !thin[i])
      throw Error(ErrorCode::MalformedProfile, "layer " + std::to_string(i) + " of " + std::to_string(n) +
                                                   " is thick; end layers are always thin");
  for (int i = 1; i < n; ++i) {
    if (thin[i]) continue;
    const int j = i - 1;
    int k = i;
    while (!thin[k]) ++k;
    out.push_back({j, k});
    i = k;
  }
  return out;
}

std::vector<ThickInterval> thick_intervals(const std::vector<Layer>& layers) {
  std::vector<bool> thin;
  thin.reserve(layers.size());
  for (const Layer& L : layers) thin.push_back(L.thin);
  return thick_intervals(thin);
}

}  // namespace syslab
