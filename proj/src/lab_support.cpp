#include <algorithm>
#include <exception>
#include <filesystem>
#include <thread>

#include "syslab/eplane.hpp"
#include "syslab/error.hpp"
#include "syslab/lab.hpp"
#include "syslab/samples.hpp"

namespace syslab {

namespace {

int param_int(const Params& p, const std::string& key, int fallback, const std::string& where) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used == it->second.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, where + ": '" + key + "' must be an integer");
}

std::optional<AxialCoord> parse_pair(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }), s.end());
  const auto comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string l = s.substr(0, comma), r = s.substr(comma + 1);
    const AxialCoord c{std::stoll(l, &u1), std::stoll(r, &u2)};
    if (u1 == l.size() && u2 == r.size()) return c;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

}  // namespace

VertexId resolve_vertex(const FlagComplex& c, const std::string& text) {
  if (c.plane_backed())
    if (auto p = parse_pair(text)) {
      if (auto v = c.vertex_at(*p)) return *v;
      throw Error(ErrorCode::InvalidArgument, "vertex " + p->str() + " is not in " + c.name());
    }
  if (!text.empty() && text[0] == '#') {
    try {
      const unsigned long id = std::stoul(text.substr(1));
      if (id < c.size()) return VertexId{static_cast<std::uint32_t>(id)};
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidArgument, "no vertex " + text + " in " + c.name());
  }
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (c.label(VertexId{v}) == text) return VertexId{v};
  throw Error(ErrorCode::InvalidArgument, "no vertex labelled '" + text + "' in " + c.name());
}

FlagComplex build_complex(const ComplexSpec& spec, const std::string& base_dir) {
  const std::string where = "[complex " + spec.name + "]";
  const Params& p = spec.params;
  auto allow = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : p)
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        throw Error(ErrorCode::ParseError, where + ": unknown key '" + k + "'");
  };
  if (spec.source == "eplane") {
    allow({"center", "radius"});
    AxialCoord center{};
    if (auto it = p.find("center"); it != p.end()) {
      auto c = parse_pair(it->second);
      if (!c) throw Error(ErrorCode::ParseError, where + ": center must be 'a,b'");
      center = *c;
    }
    return window(center, param_int(p, "radius", 8, where));
  }
  if (spec.source == "file") {
    allow({"path"});
    auto it = p.find("path");
    if (it == p.end()) throw Error(ErrorCode::ParseError, where + ": missing 'path'");
    std::filesystem::path path(it->second);
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    return load_complex(path.string());
  }
  if (spec.source == "tree-T") {
    allow({"depth"});
    return tree_t(param_int(p, "depth", 10, where));
  }
  if (spec.source == "disk") {
    allow({"sample"});
    auto it = p.find("sample");
    if (it == p.end()) throw Error(ErrorCode::ParseError, where + ": missing 'sample'");
    return flat_disk_sample(it->second);
  }
  allow({"parameter", "radius"});
  const int param = param_int(p, "parameter", spec.source == "book" ? 3 : 2, where);
  const auto gen = make_generator(spec.source, param);
  const GeneratorKey root = spec.source == "book" ? BookGenerator::key(0, {0, 0}) : GeneratorKey{0, 0, 0};
  return materialize(*gen, root, param_int(p, "radius", 6, where));
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), 1, std::max<std::size_t>(n, 1));
  std::vector<std::exception_ptr> errors(n);
  auto body = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<VertexPath> tree_rays(const FlagComplex& tree, VertexId x) {
  // the half-line vertex (key (m, 0, 0)) with the largest m
  std::optional<VertexId> tip;
  for (std::uint32_t v = 0; v < tree.size(); ++v) {
    const GeneratorKey& k = tree.key(VertexId{v});
    if (k[1] == 0 && k[2] == 0 && (!tip || k[0] > tree.key(*tip)[0])) tip = VertexId{v};
  }
  if (!tip) throw Error(ErrorCode::InvalidArgument, tree.name() + " has no half-line");
  // every geodesic from x to the tip, by walking down the distance-to-tip gradient
  const auto to_tip = bfs_distances(tree, *tip, 1 << 20);
  if (to_tip[x.value] < 0) throw Error(ErrorCode::Unreachable, "the half-line end is not reachable");
  std::vector<VertexPath> rays;
  VertexPath cur{x};
  std::function<void()> walk = [&] {
    const VertexId v = cur.back();
    if (v == *tip) {
      rays.push_back(cur);
      return;
    }
    for (VertexId w : tree.neighbors(v))
      if (to_tip[w.value] == to_tip[v.value] - 1) {
        cur.push_back(w);
        walk();
        cur.pop_back();
      }
  };
  walk();
  return rays;
}

VertexPath plane_ray(const FlagComplex& w, VertexId x, VertexId y) {
  if (!w.plane_backed()) throw Error(ErrorCode::NotPlaneBacked, w.name() + " is not plane-backed");
  const AxialCoord cx = w.coord(x);
  const AxialCoord t = x == y ? AxialCoord{1, 0} : w.coord(y) - cx;
  // furthest multiple of t that keeps a margin of two
  std::int64_t s = 1;
  while (true) {
    auto next = w.vertex_at(cx + (s + 1) * t);
    if (!next || w.margin(*next) < 2) break;
    if (!margin_safe(w, x, *next, static_cast<int>(lattice_distance(cx, w.coord(*next))))) break;
    ++s;
  }
  const auto far = w.vertex_at(cx + s * t);
  if (!far) throw Error(ErrorCode::BoundaryUnsafe, "no room for a ray from " + w.label(x));
  return select_vertex_geodesic(w, euclidean_geodesic(w, x, *far, false));
}

int ray_distance(const FlagComplex& c, VertexId y, const std::vector<VertexPath>& rays) {
  if (rays.empty()) throw Error(ErrorCode::InvalidArgument, "no rays");
  const auto row = bfs_distances(c, y, 1 << 20);
  int best = -1;
  for (const VertexPath& r : rays)
    for (VertexId v : r) {
      const int d = row[v.value];
      if (d < 0 || !margin_safe(c, y, v, d)) continue;
      if (best < 0 || d < best) best = d;
    }
  if (best < 0) throw Error(ErrorCode::BoundaryUnsafe, "no certified distance from " + c.label(y) + " to a ray");
  return best;
}

}  // namespace syslab
