#include "syslab/euclid_good.hpp"

#include <algorithm>
#include <map>

#include "syslab/error.hpp"

namespace syslab {

namespace {

EuclideanGeodesic build(const FlagComplex& c, VertexId x, VertexId y) {
  const LayerProfile p = layers(c, x, y);
  EuclideanGeodesic e;
  e.x = x;
  e.y = y;
  e.intervals = thick_intervals(p.layers);
  std::map<int, std::pair<CharDisk, Diagonal>> thick;  // keyed by layer
  for (const ThickInterval& iv : e.intervals) {
    CharDisk d = characteristic_disk(c, p, iv);
    Diagonal diag = euclidean_diagonal(d);
    for (int i = iv.j + 1; i < iv.k; ++i) thick.emplace(i, std::make_pair(d, diag));
  }
  for (int i = 0; i <= p.n; ++i) {
    if (i == 0 || i == p.n) {
      e.delta.push_back(Simplex::vertex(i == 0 ? x : y));
      e.source.push_back(DeltaSource::Endpoint);
    } else if (auto it = thick.find(i); it != thick.end()) {
      const auto& [d, diag] = it->second;
      e.delta.push_back(characteristic_map(c, d, diag.at(i)));
      e.source.push_back(DeltaSource::CharacteristicImage);
    } else {
      const Layer& L = p.layers[i];
      std::vector<VertexId> both = L.sigma.vertices();
      both.insert(both.end(), L.tau.begin(), L.tau.end());
      e.delta.push_back(span(c, std::move(both)));
      e.source.push_back(DeltaSource::ThinSpan);
    }
    const auto& layer = p.layers[i].vertices;
    for (VertexId v : e.delta.back())
      if (!std::binary_search(layer.begin(), layer.end(), v))
        throw Error(ErrorCode::ConditionViolated,
                    "simplex " + std::to_string(i) + " of the Euclidean geodesic leaves its layer at " + c.label(v));
  }
  return e;
}

}  // namespace

EuclideanGeodesic euclidean_geodesic(const FlagComplex& c, VertexId x, VertexId y, bool check_reversal) {
  EuclideanGeodesic e = build(c, x, y);
  if (check_reversal && x != y) {
    const EuclideanGeodesic r = build(c, y, x);
    if (!std::equal(e.delta.begin(), e.delta.end(), r.delta.rbegin(), r.delta.rend()))
      throw Error(ErrorCode::ConditionViolated,
                  "Euclidean geodesic from " + c.label(x) + " to " + c.label(y) + " is not symmetric");
  }
  return e;
}

VertexPath select_vertex_geodesic(const FlagComplex& c, const EuclideanGeodesic& e) {
  const int n = e.length();
  // ok[i][a]: the a-th vertex of delta_i can be continued to y
  std::vector<std::vector<char>> ok(n + 1);
  ok[n].assign(e.delta[n].size(), 1);
  for (int i = n - 1; i >= 0; --i) {
    ok[i].assign(e.delta[i].size(), 0);
    for (std::size_t a = 0; a < e.delta[i].size(); ++a)
      for (std::size_t b = 0; b < e.delta[i + 1].size(); ++b)
        if (ok[i + 1][b] && c.adjacent(e.delta[i].vertices()[a], e.delta[i + 1].vertices()[b])) ok[i][a] = 1;
  }
  VertexPath path;
  for (int i = 0; i <= n; ++i) {
    const auto& vs = e.delta[i].vertices();
    bool placed = false;
    for (std::size_t a = 0; a < vs.size() && !placed; ++a)
      if (ok[i][a] && (i == 0 || c.adjacent(path.back(), vs[a]))) {
        path.push_back(vs[a]);
        placed = true;
      }
    if (!placed)
      throw Error(ErrorCode::NoSelection, "no vertex geodesic runs through the Euclidean geodesic from " +
                                              c.label(e.x) + " to " + c.label(e.y) + " (stuck at layer " +
                                              std::to_string(i) + ")");
  }
  return path;
}

namespace {

// Distances from a fixed set of sources, certified against window truncation.
class DistanceTable {
 public:
  DistanceTable(const FlagComplex& c, const VertexPath& sources, int budget) : c_(c) {
    for (VertexId s : sources)
      if (!rows_.count(s)) rows_.emplace(s, bfs_distances(c, s, budget));
  }
  int operator()(VertexId a, VertexId b) const {
    const int d = rows_.at(a)[b.value];
    if (d < 0) throw Error(ErrorCode::Unreachable, c_.label(a) + " and " + c_.label(b) + " are not within budget");
    require_margin_safe(c_, a, b, d);
    return d;
  }

 private:
  const FlagComplex& c_;
  std::map<VertexId, std::vector<int>> rows_;
};

}  // namespace

GoodnessReport goodness_constant(const FlagComplex& c, const VertexPath& g) {
  if (!is_geodesic(c, g)) throw Error(ErrorCode::InvalidArgument, "goodness is measured on geodesics");
  GoodnessReport rep;
  rep.geodesic = g;
  const int n = static_cast<int>(g.size()) - 1;
  const DistanceTable dist(c, g, 2 * n + 2);
  for (int j = 0; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      const EuclideanGeodesic e = euclidean_geodesic(c, g[j], g[k], false);
      ++rep.pairs;
      for (int t = 0; t <= k - j; ++t)
        for (VertexId u : e.delta[t]) {
          const int d = dist(g[j + t], u);
          if (d > rep.constant || !rep.witness) {
            rep.witness = GoodnessWitness{j, k, j + t, u};
            rep.constant = d;
          }
        }
    }
  return rep;
}

ContractingReport verify_contracting(const FlagComplex& c, const VertexPath& g1, const VertexPath& g2,
                                     const std::vector<Rational>& cs, int D) {
  if (g1.empty() || g2.empty() || g1.front() != g2.front())
    throw Error(ErrorCode::InvalidArgument, "both paths must leave the same origin");
  const int budget = static_cast<int>(g1.size() + g2.size());
  const DistanceTable dist(c, g1, budget);
  ContractingReport rep;
  bool first = true;
  for (const Rational& cr : cs)
    for (int n = 0; n < static_cast<int>(g1.size()); ++n)
      for (int m = 0; m < static_cast<int>(g2.size()); ++m) {
        const auto cn = (cr * Rational(n)).floor(), cm = (cr * Rational(m)).floor();
        const Rational lhs(dist(g1[cn], g2[cm]));
        const Rational rhs = cr * Rational(dist(g1[n], g2[m]));
        const double slack = (lhs - rhs).to_double();
        if (first || slack > rep.max_slack) rep.max_slack = slack;
        first = false;
        ++rep.checks;
        if (lhs > rhs + Rational(D)) ++rep.violations;
      }
  return rep;
}

ContractingReport verify_doubling(const FlagComplex& c, const VertexPath& g1, const VertexPath& g2, int D) {
  if (g1.size() != g2.size() || g1.empty()) throw Error(ErrorCode::InvalidArgument, "paths must have equal length");
  const DistanceTable dist(c, g1, 1 << 20);
  ContractingReport rep;
  const int d0 = dist(g1.front(), g2.front());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    const int di = dist(g1[i], g2[i]);
    rep.max_slack = std::max(rep.max_slack, static_cast<double>(di - d0));
    ++rep.checks;
    if (di > d0 + 2 * D + 1) ++rep.violations;
  }
  return rep;
}

}  // namespace syslab
