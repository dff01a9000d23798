#include "syslab/isometry_dyn.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "syslab/eplane.hpp"
#include "syslab/error.hpp"

namespace syslab {

Isometry Isometry::table(const FlagComplex& c, std::vector<VertexId> image) {
  if (image.size() != c.size()) throw Error(ErrorCode::InvalidArgument, "permutation must list every vertex once");
  std::vector<char> hit(c.size(), 0);
  for (VertexId v : image) {
    if (v.value >= c.size() || hit[v.value]) throw Error(ErrorCode::InvalidArgument, "permutation is not a bijection");
    hit[v.value] = 1;
  }
  for (std::uint32_t u = 0; u < c.size(); ++u)
    for (VertexId w : c.neighbors(VertexId{u}))
      if (!c.adjacent(image[u], image[w.value]))
        throw Error(ErrorCode::InvalidArgument,
                    "permutation breaks the edge " + c.label(VertexId{u}) + "-" + c.label(w));
  return Isometry(std::move(image));
}

const PlaneIsometry& Isometry::plane_map() const {
  if (!is_plane()) throw Error(ErrorCode::NotTranslationLike, "isometry is a permutation table, not a plane map");
  return std::get<PlaneIsometry>(map_);
}

const std::vector<VertexId>& Isometry::table_map() const {
  if (is_plane()) throw Error(ErrorCode::InvalidArgument, "isometry is a plane map, not a table");
  return std::get<std::vector<VertexId>>(map_);
}

VertexId Isometry::apply(const FlagComplex& c, VertexId v) const {
  if (is_plane()) return apply_in(c, plane_map(), v);
  const auto& t = table_map();
  if (t.size() != c.size()) throw Error(ErrorCode::InvalidArgument, "permutation belongs to another complex");
  return t.at(v.value);
}

VertexId Isometry::apply_power(const FlagComplex& c, VertexId v, int k) const {
  if (is_plane()) return apply_in(c, plane_map().power(k), v);
  const Isometry step = k < 0 ? inverse() : *this;
  for (int i = 0; i < std::abs(k); ++i) v = step.apply(c, v);
  return v;
}

Isometry Isometry::inverse() const {
  if (is_plane()) return Isometry(plane_map().inverse());
  const auto& t = table_map();
  std::vector<VertexId> inv(t.size());
  for (std::uint32_t u = 0; u < t.size(); ++u) inv[t[u].value] = VertexId{u};
  return Isometry(std::move(inv));
}

std::string Isometry::str() const {
  if (is_plane()) return plane_map().str();
  return "perm(" + std::to_string(table_map().size()) + ")";
}

Isometry parse_permutation(std::istream& in, const FlagComplex& c) {
  std::string line;
  int lineno = 0;
  bool header = false;
  std::vector<std::optional<VertexId>> image(c.size());
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (!header) {
      std::string version;
      if (first != "perm" || !(ss >> version) || version != "v1") fail("expected header 'perm v1'");
      header = true;
      continue;
    }
    std::string arrow, extra;
    long long u = -1, v = -1;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      fail("expected 'u -> v'");
    }
    if (!(ss >> arrow >> v) || arrow != "->" || (ss >> extra)) fail("expected 'u -> v'");
    if (u < 0 || v < 0 || u >= static_cast<long long>(c.size()) || v >= static_cast<long long>(c.size()))
      fail("vertex id out of range");
    if (image[u]) fail("vertex " + std::to_string(u) + " mapped twice");
    image[u] = VertexId{static_cast<std::uint32_t>(v)};
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing header 'perm v1'");
  std::vector<VertexId> out;
  for (std::size_t u = 0; u < image.size(); ++u) {
    if (!image[u]) throw Error(ErrorCode::ParseError, "vertex " + std::to_string(u) + " has no image");
    out.push_back(*image[u]);
  }
  try {
    return Isometry::table(c, std::move(out));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Isometry load_permutation(const std::string& path, const FlagComplex& c) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_permutation(in, c);
}

std::int64_t plane_displacement(const PlaneIsometry& h, AxialCoord v) { return lattice_distance(v, h.apply(v)); }

int displacement(const FlagComplex& c, const Isometry& h, VertexId v) {
  if (h.is_plane() && c.plane_backed()) return static_cast<int>(plane_displacement(h.plane_map(), c.coord(v)));
  return distance(c, v, h.apply(c, v), 1 << 20);
}

bool is_hyperbolic(const PlaneIsometry& h) {
  const auto& m = h.matrix();
  const std::int64_t a00 = m[0] - 1, a01 = m[1], a10 = m[2], a11 = m[3] - 1;
  const AxialCoord t = h.translation_part();
  if (a00 * a11 - a01 * a10 != 0) return false;  // unique fixed point
  if (a00 == 0 && a01 == 0 && a10 == 0 && a11 == 0) return t != AxialCoord{};
  // rank one: (M - I) x = -t is solvable iff t lies on the image line
  return a00 * t.b - a10 * t.a != 0 || a01 * t.b - a11 * t.a != 0;
}

bool is_hyperbolic(const FlagComplex& c, const Isometry& h) {
  if (h.is_plane()) return is_hyperbolic(h.plane_map());
  // a simplex fixed setwise contains whole cycles of the permutation
  const auto& t = h.table_map();
  std::vector<char> seen(t.size(), 0);
  for (std::uint32_t s = 0; s < t.size(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> cyc;
    for (VertexId v{s}; !seen[v.value]; v = t[v.value]) {
      seen[v.value] = 1;
      cyc.push_back(v);
    }
    if (is_clique(c, cyc)) return false;
  }
  if (c.is_window()) throw Error(ErrorCode::Inconclusive, "no fixed simplex inside the window, but it is truncated");
  return true;
}

std::int64_t translation_length(const PlaneIsometry& h) {
  if (!is_hyperbolic(h)) throw Error(ErrorCode::PreconditionViolated, "translation length is defined for hyperbolic maps");
  const auto& m = h.matrix();
  const AxialCoord t = h.translation_part();
  const AxialCoord c1{m[0] - 1, m[2]}, c2{m[1], m[3] - 1};
  if (c1 == AxialCoord{} && c2 == AxialCoord{}) return lattice_norm(t);
  // displacement vectors are t + Z u with u generating (M - I) Z^2
  const AxialCoord c = c1 != AxialCoord{} ? c1 : c2;
  const std::int64_t g = std::gcd(c.a, c.b);
  const AxialCoord p{c.a / g, c.b / g};
  auto multiple = [&](AxialCoord v) { return p.a != 0 ? v.a / p.a : v.b / p.b; };
  const std::int64_t k = std::gcd(multiple(c1), multiple(c2));
  const AxialCoord u = k * p;
  const std::int64_t bound = 2 * lattice_norm(t) + 1;
  std::int64_t best = lattice_norm(t);
  for (std::int64_t s = -bound; s <= bound; ++s) best = std::min(best, lattice_norm(t + s * u));
  return best;
}

int translation_length(const FlagComplex& c, const Isometry& h) {
  if (h.is_plane()) return static_cast<int>(translation_length(h.plane_map()));
  if (c.is_window()) throw Error(ErrorCode::BoundaryUnsafe, "translation length of a table needs a finite complex");
  int best = -1;
  for (std::uint32_t v = 0; v < c.size(); ++v) {
    const int d = displacement(c, h, VertexId{v});
    if (best < 0 || d < best) best = d;
  }
  return best;
}

bool DisplacementSet::contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

DisplacementSet displacement_set(const FlagComplex& c, const Isometry& h, int K) {
  DisplacementSet s;
  s.K = K;
  s.window = c.name();
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (displacement(c, h, VertexId{v}) <= K) s.vertices.push_back(VertexId{v});
  return s;
}

ProximityReport check_min_proximity(const FlagComplex& c, const Isometry& h,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  ProximityReport rep;
  rep.translation_length = translation_length(c, h);
  rep.bound = 9 * rep.translation_length + 6;
  for (const auto& [x, y] : pairs) {
    for (VertexId v : {x, y})
      if (displacement(c, h, v) != rep.translation_length)
        throw Error(ErrorCode::PreconditionViolated, c.label(v) + " is not in Min(h)");
    const EuclideanGeodesic e = euclidean_geodesic(c, x, y);
    ++rep.pairs;
    bool bad = false;
    for (const Simplex& s : e.delta)
      for (VertexId v : s) {
        const int d = displacement(c, h, v);
        if (!rep.witness || d > rep.max_displacement) {
          rep.max_displacement = d;
          rep.witness = v;
        }
        bad = bad || d > rep.bound;
      }
    rep.violations += bad;
  }
  return rep;
}

std::vector<AxialCoord> invariant_geodesic_on_plane(const PlaneIsometry& h, AxialCoord x, int length) {
  if (!h.is_translation() || h.is_identity())
    throw Error(ErrorCode::NotTranslationLike, h.str() + " is not a nonzero translation");
  if (length < 0) throw Error(ErrorCode::InvalidArgument, "length must be nonnegative");
  const AxialCoord t = h.translation_part();
  // t = alpha e_k + beta e_{k+1} with alpha > 0, beta >= 0
  int k = 0;
  std::int64_t alpha = 0, beta = 0;
  for (; k < 6; ++k) {
    const AxialCoord e1 = kUnitSteps[k], e2 = kUnitSteps[(k + 1) % 6];
    alpha = t.a * e2.b - t.b * e2.a;
    beta = e1.a * t.b - e1.b * t.a;
    if (alpha > 0 && beta >= 0) break;
  }
  const AxialCoord e1 = kUnitSteps[k], e2 = kUnitSteps[(k + 1) % 6];
  const PlanePoint dir = embed(t);
  const PlanePoint origin = embed(x);
  auto off_line = [&](AxialCoord v) {
    const ExactScalar cr = cross(embed(v) - origin, dir);
    return cr.sign() < 0 ? -cr : cr;
  };
  std::vector<AxialCoord> alpha_path{x};
  std::int64_t used1 = 0, used2 = 0;
  while (used1 + used2 < alpha + beta) {
    std::optional<AxialCoord> best;
    for (int which = 0; which < 2; ++which) {
      if (which == 0 ? used1 >= alpha : used2 >= beta) continue;
      const AxialCoord cand = alpha_path.back() + (which == 0 ? e1 : e2);
      if (!best) {
        best = cand;
        continue;
      }
      const int cmp = (off_line(cand) - off_line(*best)).sign();
      if (cmp < 0 || (cmp == 0 && cand < *best)) best = cand;
    }
    (*best - alpha_path.back() == e1 ? used1 : used2) += 1;
    alpha_path.push_back(*best);
  }
  const std::int64_t n = alpha + beta;
  std::vector<AxialCoord> out;
  for (int i = 0; i <= length; ++i) {
    const std::int64_t q = i / n, r = i % n;
    out.push_back(h.power(q).apply(alpha_path[r]));
  }
  for (std::size_t i = 0; i + n < out.size(); ++i)
    if (out[i + n] != h.apply(out[i]))
      throw Error(ErrorCode::ConditionViolated, "invariant path is not preserved by " + h.str());
  return out;
}

ExactScalar squared_axis_deviation(const PlaneIsometry& h, AxialCoord x, const std::vector<AxialCoord>& path) {
  const PlanePoint dir = embed(h.apply(x)) - embed(x);
  if (dir == PlanePoint{}) throw Error(ErrorCode::NotTranslationLike, "x is fixed, no axis");
  ExactScalar best = 0;
  for (AxialCoord v : path) {
    const ExactScalar cr = cross(embed(v) - embed(x), dir);
    const ExactScalar d2 = cr * cr / squared_norm(dir);
    if (d2 > best) best = d2;
  }
  return best;
}

namespace {

bool occurs_in(const VertexPath& hay, const VertexPath& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

AxisApprox central_good_geodesic(const FlagComplex& c, const Isometry& h, VertexId x, int n, int stride) {
  if (n < 1 || stride < 1 || stride > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= stride <= n");
  const int L = translation_length(c, h);
  if (displacement(c, h, x) != L) throw Error(ErrorCode::PreconditionViolated, c.label(x) + " is not in Min(h)");
  AxisApprox ax;
  ax.n = n;
  ax.stride = stride;
  for (int m = stride; m <= n; m += stride) {
    const VertexId a = h.apply_power(c, x, -m), b = h.apply_power(c, x, m);
    ax.family.push_back(select_vertex_geodesic(c, euclidean_geodesic(c, a, b)));
  }
  const VertexPath& last = ax.family.back();
  const auto len = static_cast<int>(last.size());
  const int center2 = len - 1;  // twice the central index
  int best_lo = -1, best_hi = -1;
  for (int lo = 0; lo < len; ++lo)
    for (int hi = lo; hi < len; ++hi) {
      const VertexPath run(last.begin() + lo, last.begin() + hi + 1);
      bool common = true;
      for (const VertexPath& g : ax.family) common = common && occurs_in(g, run);
      if (!common) break;
      const int size = hi - lo, best_size = best_hi - best_lo;
      if (best_lo < 0 || size > best_size ||
          (size == best_size && std::abs(lo + hi - center2) < std::abs(best_lo + best_hi - center2))) {
        best_lo = lo;
        best_hi = hi;
      }
    }
  if (best_lo < 0)
    throw Error(ErrorCode::NoStableSegment, "selected geodesics between h^-m x and h^m x share no vertex (" +
                                                std::to_string(ax.family.size()) + " truncations)");
  ax.segment.assign(last.begin() + best_lo, last.begin() + best_hi + 1);
  for (VertexId v : ax.segment) ax.K = std::max(ax.K, displacement(c, h, v));
  return ax;
}

ConvergenceReport convergence_diagnostic(const FlagComplex& c, const Isometry& h, VertexId x,
                                         const AxisApprox& gamma, int n_max) {
  // orbit of the segment, as far as the complex reaches
  std::set<VertexId> orbit(gamma.segment.begin(), gamma.segment.end());
  for (int dir : {1, -1}) {
    std::vector<VertexId> cur = gamma.segment;
    for (int step = 0; step < static_cast<int>(c.size()); ++step) {
      std::vector<VertexId> next;
      try {
        for (VertexId v : cur) next.push_back(dir > 0 ? h.apply(c, v) : h.inverse().apply(c, v));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundaryUnsafe) throw;
        break;
      }
      bool fresh = false;
      for (VertexId v : next) fresh = orbit.insert(v).second || fresh;
      if (!fresh) break;
      cur = std::move(next);
    }
  }
  const std::vector<VertexId> targets(orbit.begin(), orbit.end());
  auto dist_to_orbit = [&](VertexId v) {
    const auto row = bfs_distances(c, v, 1 << 20);
    int best = -1;
    for (VertexId o : targets)
      if (row[o.value] >= 0 && margin_safe(c, v, o, row[o.value]) && (best < 0 || row[o.value] < best))
        best = row[o.value];
    if (best < 0) throw Error(ErrorCode::BoundaryUnsafe, "no certified distance from " + c.label(v) + " to the orbit");
    return best;
  };
  ConvergenceReport rep;
  rep.base = dist_to_orbit(x);
  const auto from_orbit = bfs_distances(c, targets, 1 << 20);
  for (VertexId v : displacement_set(c, h, gamma.K).vertices) {
    const int d = from_orbit[v.value];
    if (d >= 0 && c.margin(v) >= d) rep.radius = std::max(rep.radius, d);
  }
  for (int m = 1; m <= n_max; ++m) {
    const int d = dist_to_orbit(h.apply_power(c, x, m));
    rep.distances.push_back(d);
    rep.bounded = rep.bounded && d <= rep.base + rep.radius;
  }
  return rep;
}

}  // namespace syslab
