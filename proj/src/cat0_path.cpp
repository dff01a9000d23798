#include "syslab/cat0_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "syslab/error.hpp"

namespace syslab {

namespace {

bool collinear_all(const std::vector<PlanePoint>& pts) {
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (orient(pts[0], pts[1], pts[i]) != 0) return false;
  return true;
}

// Closed segments ab and cd share a point.
bool segments_meet(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c, const PlanePoint& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

}  // namespace

PolygonDomain polygon_domain(std::vector<PlanePoint> boundary) {
  std::vector<PlanePoint> pts;
  for (const PlanePoint& p : boundary)
    if (pts.empty() || pts.back() != p) pts.push_back(p);
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  if (pts.size() < 2) throw Error(ErrorCode::DegenerateDomain, "domain has fewer than two distinct points");
  PolygonDomain dom;
  ExactScalar area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) area += cross(pts[i], pts[(i + 1) % pts.size()]);
  if (area.is_zero()) {
    if (!collinear_all(pts)) throw Error(ErrorCode::DegenerateDomain, "boundary has zero area but is not a segment");
    dom.degenerate = true;
    dom.boundary = std::move(pts);
    return dom;
  }
  const std::size_t n = pts.size();
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = e + 1; f < n; ++f) {
      const bool neighbours = f == e + 1 || (e == 0 && f == n - 1);
      const PlanePoint &a = pts[e], &b = pts[(e + 1) % n], &c = pts[f], &d = pts[(f + 1) % n];
      if (neighbours) {
        // adjacent edges may only share their common endpoint
        const PlanePoint& shared = f == e + 1 ? b : a;
        const PlanePoint& far1 = f == e + 1 ? a : b;
        const PlanePoint& far2 = f == e + 1 ? d : c;
        if (orient(far1, shared, far2) == 0 && dot(far1 - shared, far2 - shared).sign() > 0)
          throw Error(ErrorCode::DegenerateDomain, "boundary folds back on itself");
        continue;
      }
      if (segments_meet(a, b, c, d)) throw Error(ErrorCode::DegenerateDomain, "boundary self-intersects");
    }
  dom.boundary = std::move(pts);
  return dom;
}

bool contains(const PolygonDomain& dom, const PlanePoint& p) {
  const auto& pts = dom.boundary;
  const std::size_t n = pts.size();
  for (std::size_t e = 0; e < n; ++e)
    if (on_segment(pts[e], pts[(e + 1) % n], p)) return true;
  if (dom.degenerate) return false;
  int winding = 0;
  for (std::size_t e = 0; e < n; ++e) {
    const PlanePoint &a = pts[e], &b = pts[(e + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0) ++winding;
    } else if (b.y <= p.y && orient(a, b, p) < 0) {
      --winding;
    }
  }
  return winding != 0;
}

bool visible(const PolygonDomain& dom, const PlanePoint& p, const PlanePoint& q) {
  if (p == q) return contains(dom, p);
  const PlanePoint dir = q - p;
  const ExactScalar len2 = squared_norm(dir);
  std::vector<ExactScalar> cuts{ExactScalar(0), ExactScalar(1)};
  auto keep = [&](const ExactScalar& t) {
    if (t.sign() >= 0 && (t - 1).sign() <= 0) cuts.push_back(t);
  };
  const auto& pts = dom.boundary;
  const std::size_t n = pts.size();
  for (std::size_t e = 0; e < n; ++e) {
    const PlanePoint &a = pts[e], &b = pts[(e + 1) % n];
    const int oa = orient(p, q, a), ob = orient(p, q, b);
    if (oa * ob > 0) continue;  // edge strictly on one side
    const int op = orient(a, b, p), oq = orient(a, b, q);
    if (op * oq > 0) continue;
    if (oa * ob < 0 && op * oq < 0) return false;  // proper crossing leaves the domain
    const ExactScalar denom = cross(dir, b - a);
    if (denom.is_zero()) {
      if (orient(p, q, a) == 0) {
        keep(dot(a - p, dir) / len2);
        keep(dot(b - p, dir) / len2);
      }
      continue;
    }
    const ExactScalar t = cross(a - p, b - a) / denom;
    const ExactScalar s = cross(a - p, dir) / denom;
    if (s.sign() >= 0 && (s - 1).sign() <= 0) keep(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (!contains(dom, p) || !contains(dom, q)) return false;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const ExactScalar mid = (cuts[i] + cuts[i + 1]) / 2;
    if (!contains(dom, p + mid * dir)) return false;
  }
  return true;
}

ModifiedDisk modified_disk(const CharDisk& d) {
  ModifiedDisk m;
  m.interval = d.interval;
  for (int i = d.j(); i <= d.k(); ++i) {
    const int len = d.lengths.at(i - d.j());
    const PlanePoint v = embed(d.coord(d.v(i))), w = embed(d.coord(d.w(i)));
    const PlanePoint half = ExactScalar(Rational(1, 2 * len)) * (w - v);
    m.v.push_back(v);
    m.w.push_back(w);
    m.v_prime.push_back(v + half);
    m.w_prime.push_back(w - half);
  }
  std::vector<PlanePoint> loop(m.v_prime.begin(), m.v_prime.end());
  for (std::size_t r = m.w_prime.size() - 1; r-- > 1;) loop.push_back(m.w_prime[r]);
  m.domain = polygon_domain(std::move(loop));
  return m;
}

PolyPath shortest_path(const PolygonDomain& dom, const PlanePoint& from, const PlanePoint& to) {
  if (!contains(dom, from) || !contains(dom, to))
    throw Error(ErrorCode::OutsideDomain, "path endpoint lies outside the domain");
  std::vector<PlanePoint> nodes{from, to};
  for (const PlanePoint& p : dom.boundary)
    if (std::find(nodes.begin(), nodes.end(), p) == nodes.end()) nodes.push_back(p);
  const std::size_t n = nodes.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> prev(n, -1);
  std::vector<char> done(n, 0);
  dist[0] = 0;
  for (;;) {
    int u = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && (u < 0 || dist[i] < dist[u] - kLengthTolerance)) u = static_cast<int>(i);
    if (u < 0 || std::isinf(dist[u])) break;
    done[u] = 1;
    if (u == 1) break;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const double cand = dist[u] + euclidean_length(nodes[u], nodes[i]);
      if (cand < dist[i] - kLengthTolerance && visible(dom, nodes[u], nodes[i])) {
        dist[i] = cand;
        prev[i] = u;
      }
    }
  }
  if (!done[1]) throw Error(ErrorCode::OutsideDomain, "endpoints are not connected inside the domain");
  PolyPath path;
  for (int at = 1; at >= 0; at = prev[at]) path.points.push_back(nodes[at]);
  std::reverse(path.points.begin(), path.points.end());
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
    path.length += euclidean_length(path.points[i], path.points[i + 1]);
  return path;
}

namespace {

// Points where segment pq meets segment ab, in order along pq.
std::vector<PlanePoint> meet_points(const PlanePoint& p, const PlanePoint& q, const PlanePoint& a, const PlanePoint& b) {
  const PlanePoint dir = q - p;
  const ExactScalar denom = cross(dir, b - a);
  if (denom.is_zero()) {
    if (orient(p, q, a) != 0) return {};
    std::vector<std::pair<ExactScalar, PlanePoint>> hits;
    for (const PlanePoint& x : {a, b, p, q})
      if (on_segment(p, q, x) && on_segment(a, b, x)) hits.push_back({dot(x - p, dir), x});
    std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<PlanePoint> out;
    for (const auto& h : hits)
      if (out.empty() || out.back() != h.second) out.push_back(h.second);
    return out;
  }
  const ExactScalar t = cross(a - p, b - a) / denom;
  const ExactScalar s = cross(a - p, dir) / denom;
  if (t.sign() < 0 || (t - 1).sign() > 0 || s.sign() < 0 || (s - 1).sign() > 0) return {};
  return {p + t * dir};
}

}  // namespace

std::vector<int> nearest_positions(const ExactScalar& u) {
  const auto f = static_cast<int>(u.floor());
  const int half = (u - ExactScalar(f) - ExactScalar(Rational(1, 2))).sign();
  if (half == 0) return {f, f + 1};
  return {half < 0 ? f : f + 1};
}

Diagonal euclidean_diagonal(const CharDisk& d, const PolyPath& alpha) {
  Diagonal diag;
  diag.interval = d.interval;
  for (int i = d.j() + 1; i < d.k(); ++i) {
    const int len = d.lengths.at(i - d.j());
    const PlanePoint a = embed(d.coord(d.v(i))), b = embed(d.coord(d.w(i)));
    std::vector<PlanePoint> hits;
    for (std::size_t s = 0; s + 1 < alpha.points.size(); ++s)
      for (const PlanePoint& h : meet_points(alpha.points[s], alpha.points[s + 1], a, b))
        if (std::find(hits.begin(), hits.end(), h) == hits.end()) hits.push_back(h);
    if (hits.empty())
      throw Error(ErrorCode::NoCrossing, "path does not meet the segment of layer " + std::to_string(i));
    if (hits.size() > 1) ++diag.coincident_crossings;
    const PlanePoint x = hits.front();
    // position along v_i w_i measured in edges
    const ExactScalar u = dot(x - a, b - a) / squared_norm(b - a) * ExactScalar(len);
    std::vector<DiskVertex> rho;
    for (int pos : nearest_positions(u)) rho.push_back({i, pos});
    diag.rho.push_back(std::move(rho));
    diag.crossing.push_back(x);
  }

  auto all_adjacent = [&](std::vector<DiskVertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (std::size_t p = 0; p < vs.size(); ++p)
      for (std::size_t q = p + 1; q < vs.size(); ++q)
        if (!d.adjacent(vs[p], vs[q])) return false;
    return true;
  };
  for (std::size_t r = 0; r + 1 < diag.rho.size(); ++r) {
    std::vector<DiskVertex> both = diag.rho[r];
    both.insert(both.end(), diag.rho[r + 1].begin(), diag.rho[r + 1].end());
    if (!all_adjacent(both))
      throw Error(ErrorCode::ConditionViolated,
                  "diagonal simplices of layers " + std::to_string(d.j() + 1 + static_cast<int>(r)) + " and " +
                      std::to_string(d.j() + 2 + static_cast<int>(r)) + " do not span a simplex");
  }
  const auto& first = diag.rho.front();
  const auto& last = diag.rho.back();
  if (first.size() != 1 || !all_adjacent({d.v(d.j()), d.w(d.j()), first.front()}) || last.size() != 1 ||
      !all_adjacent({d.v(d.k()), d.w(d.k()), last.front()}))
    throw Error(ErrorCode::ConditionViolated, "diagonal does not close up with the end edges of the disk");
  return diag;
}

Diagonal euclidean_diagonal(const CharDisk& d) {
  const ModifiedDisk m = modified_disk(d);
  return euclidean_diagonal(d, shortest_path(m.domain, m.start(), m.end()));
}

}  // namespace syslab
