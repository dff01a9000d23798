#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "syslab/eplane.hpp"
#include "syslab/error.hpp"
#include "syslab/lab.hpp"

namespace syslab {

using nlohmann::json;

namespace {

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::InvalidArgument || c == ErrorCode::IoError;
}

json labels(const FlagComplex& c, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(c.label(v));
  return out;
}

json simplices(const FlagComplex& c, const std::vector<Simplex>& seq) {
  json out = json::array();
  for (const Simplex& s : seq) out.push_back(labels(c, s.vertices()));
  return out;
}

struct Sampled {
  VertexId x, y;
  int d = 0;
};

// x uniform in the pool, then y uniform among pool vertices with
// min_d <= d(x, y) <= max_d and a certified distance.
std::vector<Sampled> sample_pairs(const FlagComplex& c, std::mt19937_64& rng, std::size_t count, int min_d, int max_d,
                                  const std::vector<VertexId>& pool) {
  std::vector<Sampled> out;
  if (pool.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t tries = 0; out.size() < count && tries < 50 * count; ++tries) {
    const VertexId x = pool[pick(rng)];
    const auto row = bfs_distances(c, x, max_d);
    std::vector<VertexId> ok;
    for (VertexId y : pool) {
      const int d = row[y.value];
      if (d >= min_d && d <= max_d && margin_safe(c, x, y, d)) ok.push_back(y);
    }
    if (ok.empty()) continue;
    const VertexId y = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
    out.push_back({x, y, row[y.value]});
  }
  return out;
}

std::vector<VertexId> all_vertices(const FlagComplex& c) {
  std::vector<VertexId> out;
  for (std::uint32_t v = 0; v < c.size(); ++v) out.push_back(VertexId{v});
  return out;
}

class TaskRun {
 public:
  TaskRun(const Scenario& s, const RunOptions& opt, const ScenarioConstants& k, const TaskSpec& t, std::size_t index)
      : s_(s), opt_(opt), k_(k), t_(t), rng_(s.seed * 0x9E3779B97F4A7C15ULL + index + 1) {
    rec_["name"] = t.name;
    rec_["kind"] = t.kind;
    rec_["inputs"] = json(t.params);
    rec_["outputs"] = json::object();
    rec_["assertions"] = json::array();
    rec_["extrema"] = json::array();
  }

  json& rec() { return rec_; }
  json& out() { return rec_["outputs"]; }
  bool failed() const { return failed_; }
  std::mt19937_64& rng() { return rng_; }
  const ScenarioConstants& constants() const { return k_; }
  const RunOptions& options() const { return opt_; }
  const Scenario& scenario() const { return s_; }

  std::string str(const std::string& key, const std::string& fallback) const {
    auto it = t_.params.find(key);
    return it == t_.params.end() ? fallback : it->second;
  }
  int integer(const std::string& key, int fallback) const {
    auto it = t_.params.find(key);
    if (it == t_.params.end()) return fallback;
    try {
      std::size_t used = 0;
      const int v = std::stoi(it->second, &used);
      if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, "[task " + t_.name + "]: '" + key + "' must be an integer");
  }
  std::vector<std::string> list(const std::string& key, const std::string& fallback) const {
    std::vector<std::string> out;
    std::stringstream ss(str(key, fallback));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
      if (!item.empty()) out.push_back(item);
    }
    return out;
  }

  // bound holds when measured <= bound
  void check(const std::string& name, const std::string& constant, double bound, double measured,
             json witness = nullptr, double tolerance = 0) {
    const bool pass = measured <= bound + tolerance;
    json a{{"name", name}, {"constant", constant}, {"bound", bound}, {"measured", measured}, {"pass", pass}};
    if (!witness.is_null()) a["witness"] = std::move(witness);
    rec_["assertions"].push_back(std::move(a));
    failed_ = failed_ || !pass;
  }
  void extremum(const std::string& quantity, double value, json witness = nullptr) {
    json e{{"quantity", quantity}, {"value", value}};
    if (!witness.is_null()) e["witness"] = std::move(witness);
    rec_["extrema"].push_back(std::move(e));
  }

 private:
  const Scenario& s_;
  const RunOptions& opt_;
  const ScenarioConstants& k_;
  const TaskSpec& t_;
  std::mt19937_64 rng_;
  json rec_;
  bool failed_ = false;
};

void geodesic_pipeline(TaskRun& r, const FlagComplex& c) {
  const VertexId x = resolve_vertex(c, r.str("x", "0,0")), y = resolve_vertex(c, r.str("y", "4,2"));
  const LayerProfile p = layers(c, x, y);
  const EuclideanGeodesic e = euclidean_geodesic(c, x, y);
  const VertexPath g = select_vertex_geodesic(c, e);
  json& o = r.out();
  o["distance"] = p.n;
  o["directed_forward"] = simplices(c, p.sigma.simplices);
  o["directed_backward"] = simplices(c, p.tau.simplices);
  json thick = json::array();
  for (const Layer& L : p.layers) thick.push_back(L.thickness);
  o["thickness"] = thick;
  json ivs = json::array();
  for (const ThickInterval& iv : e.intervals) ivs.push_back({iv.j, iv.k});
  o["thick_intervals"] = ivs;
  json delta = json::array();
  static const char* names[] = {"endpoint", "thin-span", "characteristic-image"};
  for (std::size_t i = 0; i < e.delta.size(); ++i)
    delta.push_back({{"simplex", labels(c, e.delta[i].vertices())}, {"source", names[static_cast<int>(e.source[i])]}});
  o["delta"] = delta;
  o["vertex_geodesic"] = labels(c, g);

  std::size_t bad = 0;
  for (const auto& seq : {p.sigma.simplices, directed_geodesic(c, y, x).simplices})
    bad += !directed_conditions_failure(c, seq).empty();
  r.check("directed geodesics satisfy both defining conditions", "directed conditions", 0, static_cast<double>(bad));
  const GoodnessReport gr = goodness_constant(c, g);
  json w;
  if (gr.witness) w = {{"j", gr.witness->j}, {"k", gr.witness->k}, {"i", gr.witness->i}, {"u", c.label(gr.witness->u)}};
  o["goodness"] = gr.constant;
  r.check("selected geodesic is C-good", "C", r.constants().cd.C, gr.constant, w);
}

void goodness_sweep(TaskRun& r, const FlagComplex& c) {
  const int pairs = r.integer("pairs", 200);
  const auto sample = sample_pairs(c, r.rng(), pairs, r.integer("min_distance", 1), r.integer("max_distance", 16),
                                   all_vertices(c));
  std::vector<std::optional<GoodnessReport>> reps(sample.size());
  std::vector<std::string> skipped(sample.size());
  parallel_for(sample.size(), r.options().jobs, [&](std::size_t i) {
    try {
      reps[i] = goodness_constant(c, select_vertex_geodesic(c, euclidean_geodesic(c, sample[i].x, sample[i].y)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryUnsafe) throw;
      skipped[i] = e.what();
    }
  });
  int worst = 0;
  json witness;
  std::map<int, int> histogram;
  std::size_t measured = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!reps[i]) continue;
    ++measured;
    ++histogram[reps[i]->constant];
    if (witness.is_null() || reps[i]->constant > worst) {
      worst = reps[i]->constant;
      const auto& wt = *reps[i]->witness;
      witness = {{"x", c.label(sample[i].x)}, {"y", c.label(sample[i].y)}, {"distance", sample[i].d},
                 {"j", wt.j}, {"k", wt.k}, {"i", wt.i}, {"u", c.label(wt.u)}};
    }
  }
  json h = json::object();
  for (auto [v, n] : histogram) h[std::to_string(v)] = n;
  r.out()["pairs_requested"] = pairs;
  r.out()["pairs_measured"] = measured;
  r.out()["pairs_skipped_boundary"] = sample.size() - measured;
  r.out()["goodness_histogram"] = h;
  if (measured == 0) throw Error(ErrorCode::TaskFailed, "no pair could be measured");
  r.extremum("max goodness constant", worst, witness);
  r.check("every selected geodesic is C-good", "C", r.constants().cd.C, worst, witness);
}

Isometry make_isometry(const Scenario& s, const std::string& name, const FlagComplex& c,
                       const std::map<std::string, FlagComplex>& built) {
  for (const IsometrySpec& iso : s.isometries) {
    if (iso.name != name) continue;
    if (!iso.literal.empty()) return Isometry::plane(parse_isometry(iso.literal));
    std::filesystem::path path(iso.perm);
    if (path.is_relative()) path = std::filesystem::path(s.base_dir) / path;
    return load_permutation(path.string(), built.count(iso.complex) ? built.at(iso.complex) : c);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown isometry '" + name + "'");
}

void displacement_study(TaskRun& r, const FlagComplex& c, const Isometry& h) {
  json& o = r.out();
  o["isometry"] = h.str();
  const bool hyp = is_hyperbolic(c, h);
  o["hyperbolic"] = hyp;
  if (!hyp) throw Error(ErrorCode::PreconditionViolated, h.str() + " fixes a simplex");
  const int L = translation_length(c, h);
  o["translation_length"] = L;
  std::vector<int> ks;
  for (const std::string& k : r.list("ks", "")) {
    try {
      ks.push_back(std::stoi(k));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "'ks' must list integers");
    }
  }
  if (ks.empty())
    for (int k = L; k <= L + 4; ++k) ks.push_back(k);
  json sizes = json::object();
  for (int k : ks) sizes[std::to_string(k)] = displacement_set(c, h, k).vertices.size();
  o["displacement_set_sizes"] = sizes;

  const auto min_set = displacement_set(c, h, L).vertices;
  o["min_set_size"] = min_set.size();
  // oversample so that pairs lost to the window boundary can be replaced
  const std::size_t wanted = r.integer("pairs", 50);
  const auto sample = sample_pairs(c, r.rng(), 2 * wanted, 0, r.integer("max_distance", 30), min_set);
  std::vector<std::optional<ProximityReport>> reps(sample.size());
  std::vector<int> fellow(sample.size(), -1);
  parallel_for(sample.size(), r.options().jobs, [&](std::size_t i) {
    try {
      reps[i] = check_min_proximity(c, h, {{sample[i].x, sample[i].y}});
      // fellow travelling of the directed geodesic and its image
      int worst = 0;
      for (const Simplex& s : directed_geodesic(c, sample[i].x, sample[i].y).simplices)
        for (VertexId v : s) worst = std::max(worst, displacement(c, h, v));
      fellow[i] = worst;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryUnsafe) throw;
    }
  });
  int worst = 0, worst_fellow = 0;
  json witness, fellow_witness;
  std::size_t measured = 0, examined = 0;
  int longest = 0;
  for (std::size_t i = 0; i < sample.size() && measured < wanted; ++i) {
    ++examined;
    if (!reps[i]) continue;
    ++measured;
    longest = std::max(longest, sample[i].d);
    json pair{{"x", c.label(sample[i].x)}, {"y", c.label(sample[i].y)}, {"distance", sample[i].d}};
    if (witness.is_null() || reps[i]->max_displacement > worst) {
      worst = reps[i]->max_displacement;
      witness = pair;
      witness["vertex"] = c.label(*reps[i]->witness);
    }
    if (fellow_witness.is_null() || fellow[i] > worst_fellow) {
      worst_fellow = fellow[i];
      fellow_witness = pair;
    }
  }
  o["pairs_measured"] = measured;
  o["pairs_skipped_boundary"] = examined - measured;
  o["longest_pair_distance"] = longest;
  if (measured == 0) throw Error(ErrorCode::TaskFailed, "no pair in Min(h) could be measured");
  r.extremum("max displacement on Euclidean geodesics between Min(h) pairs", worst, witness);
  r.check("Euclidean geodesics between Min(h) pairs lie in disp_K(h)", "9L+6", 9 * L + 6, worst, witness);
  r.check("directed geodesics between Min(h) pairs fellow-travel their images", "3max+1", 3 * L + 1, worst_fellow,
          fellow_witness);

  if (!r.str("central_n", "").empty()) {
    const VertexId x = resolve_vertex(c, r.str("central_x", "0,0"));
    const AxisApprox ax = central_good_geodesic(c, h, x, r.integer("central_n", 4), r.integer("stride", 1));
    o["central_segment"] = labels(c, ax.segment);
    o["central_K"] = ax.K;
    r.check("central segment lies in disp_K(h)", "9L+6", 9 * L + 6, ax.K, json{{"segment", labels(c, ax.segment)}});
    const ConvergenceReport cv = convergence_diagnostic(c, h, x, ax, r.integer("n_max", 4));
    o["convergence"] = {{"distances", cv.distances}, {"base", cv.base}, {"radius", cv.radius}, {"bounded", cv.bounded}};
    const int far = cv.distances.empty() ? 0 : *std::max_element(cv.distances.begin(), cv.distances.end());
    r.check("orbit of x stays near the central segment", "M+R", cv.base + cv.radius, far);
  }

  // the h-invariant nearest-line path and its goodness against its distance K from the axis
  if (!r.str("axis_length", "").empty()) {
    if (!h.is_plane() || !c.plane_backed())
      throw Error(ErrorCode::NotPlaneBacked, "axis_length needs a plane isometry on a plane-backed complex");
    const AxialCoord x = c.coord(resolve_vertex(c, r.str("central_x", "0,0")));
    const auto path = invariant_geodesic_on_plane(h.plane_map(), x, r.integer("axis_length", 12));
    VertexPath seg;
    for (AxialCoord p : path) {
      const auto v = c.vertex_at(p);
      if (!v) throw Error(ErrorCode::BoundaryUnsafe, "invariant path leaves the window");
      seg.push_back(*v);
    }
    const ExactScalar k2 = squared_axis_deviation(h.plane_map(), x, path);
    const double K = std::sqrt(k2.to_double());
    const GoodnessReport g = goodness_constant(c, seg);
    o["axis_path"] = labels(c, seg);
    o["axis_squared_distance"] = k2.str();
    o["axis_goodness"] = g.constant;
    json w{{"path_from", c.label(seg.front())}, {"path_to", c.label(seg.back())}};
    if (g.witness) w["vertex"] = c.label(g.witness->u);
    r.check("invariant path is good within its axis distance", "4K/sqrt3+1", 4 * K / std::sqrt(3.0) + 1, g.constant,
            w, r.constants().tolerance);
  }
}

Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "'" + s + "' is not a fraction");
  }
}

void contracting_suite(TaskRun& r, const FlagComplex& c) {
  const VertexId origin = resolve_vertex(c, r.str("origin", c.plane_backed() ? "0,0" : "#0"));
  std::vector<Rational> cs;
  for (const std::string& f : r.list("cs", "1/4,1/2,3/4")) cs.push_back(parse_fraction(f));
  const int D = r.constants().cd.D;
  const int max_len = r.integer("max_length", 10);
  const auto row = bfs_distances(c, origin, max_len);
  std::vector<VertexId> near;
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (row[v] > 0 && margin_safe(c, origin, VertexId{v}, row[v])) near.push_back(VertexId{v});
  if (near.empty()) throw Error(ErrorCode::TaskFailed, "no vertex around the origin");
  const std::size_t pairs = r.integer("pairs", 500);
  std::uniform_int_distribution<std::size_t> pick(0, near.size() - 1);
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (std::size_t i = 0; i < pairs; ++i) ends.push_back({near[pick(r.rng())], near[pick(r.rng())]});

  std::vector<std::optional<ContractingReport>> reps(ends.size());
  parallel_for(ends.size(), r.options().jobs, [&](std::size_t i) {
    try {
      const VertexPath g1 = select_vertex_geodesic(c, euclidean_geodesic(c, origin, ends[i].first));
      const VertexPath g2 = select_vertex_geodesic(c, euclidean_geodesic(c, origin, ends[i].second));
      reps[i] = verify_contracting(c, g1, g2, cs, D);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryUnsafe) throw;
    }
  });
  std::size_t checks = 0, violations = 0, measured = 0;
  double slack = -1e300;
  json witness;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (!reps[i]) continue;
    ++measured;
    checks += reps[i]->checks;
    violations += reps[i]->violations;
    if (reps[i]->max_slack > slack) {
      slack = reps[i]->max_slack;
      witness = {{"y1", c.label(ends[i].first)}, {"y2", c.label(ends[i].second)}};
    }
  }
  json& o = r.out();
  o["origin"] = c.label(origin);
  o["pairs_measured"] = measured;
  o["checks"] = checks;
  o["violations"] = violations;
  if (measured == 0) throw Error(ErrorCode::TaskFailed, "no geodesic pair could be measured");
  r.extremum("max of d(v_cn, w_cm) - c d(v_n, w_m)", slack, witness);
  r.check("contracting inequality", "D", D, slack, witness);

  const int doubling = r.integer("doubling_pairs", 100);
  if (doubling > 0 && c.plane_backed()) {
    std::uniform_int_distribution<int> step(-3, 3);
    std::vector<std::pair<std::pair<VertexId, VertexId>, AxialCoord>> asym;
    std::uniform_int_distribution<std::size_t> any(0, near.size() - 1);
    for (int i = 0; i < doubling; ++i) {
      AxialCoord t{step(r.rng()), step(r.rng())};
      if (t == AxialCoord{}) t = {1, 0};
      asym.push_back({{near[any(r.rng())], near[any(r.rng())]}, t});
    }
    std::vector<std::optional<ContractingReport>> dreps(asym.size());
    parallel_for(asym.size(), r.options().jobs, [&](std::size_t i) {
      try {
        const auto [x, y] = asym[i].first;
        const PlaneIsometry tr = PlaneIsometry::translation(asym[i].second);
        const VertexPath g1 = select_vertex_geodesic(c, euclidean_geodesic(c, x, y));
        const VertexPath g2 =
            select_vertex_geodesic(c, euclidean_geodesic(c, apply_in(c, tr, x), apply_in(c, tr, y)));
        dreps[i] = verify_doubling(c, g1, g2, D);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundaryUnsafe) throw;
      }
    });
    double dslack = 0;
    std::size_t dmeasured = 0;
    for (const auto& d : dreps)
      if (d) {
        ++dmeasured;
        dslack = std::max(dslack, d->max_slack);
      }
    o["doubling_pairs_measured"] = dmeasured;
    r.check("asymptotic geodesics stay 2D+1 close", "2D+1", 2 * D + 1, dslack);
  }
}

void extendability_study(TaskRun& r, const FlagComplex& c, const ComplexSpec& spec) {
  json rows = json::array();
  json& o = r.out();
  if (spec.source == "tree-T") {
    const VertexId x = resolve_vertex(c, r.str("x", "0"));
    const auto rays = tree_rays(c, x);
    std::vector<std::string> targets = r.list("targets", "");
    int depth = 0;
    for (std::uint32_t v = 0; v < c.size(); ++v) depth = std::max<int>(depth, c.key(VertexId{v})[1]);
    const bool tips = targets.empty();
    if (tips)
      for (int n = 2; n <= depth; ++n) targets.push_back("[" + std::to_string(n) + "," + std::to_string(n) + ",0]");
    int mismatches = 0, worst = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const VertexId y = resolve_vertex(c, targets[i]);
      const int E = ray_distance(c, y, rays);
      rows.push_back({{"y", targets[i]}, {"E", E}});
      worst = std::max(worst, E);
      if (tips && E != static_cast<int>(i) + 2) ++mismatches;
    }
    o["x"] = c.label(x);
    o["rays"] = rays.size();
    o["table"] = rows;
    r.extremum("max E", worst);
    if (tips) r.check("E(0, tip_n) = n for every branch", "E(0,tip_n)=n", 0, mismatches);
    return;
  }
  if (!c.plane_backed()) throw Error(ErrorCode::NotPlaneBacked, "extendability control needs the plane or tree-T");
  const int bound = r.integer("bound", 2);
  int reach = 0;
  for (std::uint32_t v = 0; v < c.size(); ++v) reach = std::max(reach, c.margin(VertexId{v}));
  std::vector<VertexId> inner;
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (2 * c.margin(VertexId{v}) >= reach) inner.push_back(VertexId{v});
  const auto sample = sample_pairs(c, r.rng(), r.integer("pairs", 100), 0, reach, inner);
  std::vector<int> E(sample.size(), -1);
  parallel_for(sample.size(), r.options().jobs, [&](std::size_t i) {
    E[i] = ray_distance(c, sample[i].y, {plane_ray(c, sample[i].x, sample[i].y)});
  });
  int worst = 0;
  json witness;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (witness.is_null() || E[i] > worst) {
      worst = E[i];
      witness = {{"x", c.label(sample[i].x)}, {"y", c.label(sample[i].y)}};
    }
  }
  o["pairs"] = sample.size();
  r.extremum("max E", worst, witness);
  r.check("rays through y's direction pass near y", "E-control", bound, worst, witness);
}

void figure_render(TaskRun& r, const FlagComplex& c, const std::string& dir) {
  const VertexId x = resolve_vertex(c, r.str("x", "0,0")), y = resolve_vertex(c, r.str("y", "4,2"));
  const std::string svg = render_pipeline_svg(c, x, y);
  const std::string file = r.str("file", r.rec()["name"].get<std::string>() + ".svg");
  r.out()["file"] = file;
  r.out()["bytes"] = svg.size();
  if (r.options().write_files) {
    std::filesystem::create_directories(dir);
    std::ofstream f(std::filesystem::path(dir) / file, std::ios::binary);
    if (!f || !(f << svg)) throw Error(ErrorCode::IoError, "cannot write " + (std::filesystem::path(dir) / file).string());
  }
}

}  // namespace

RunResult run_scenario(const Scenario& s, const RunOptions& opt) {
  ScenarioConstants k = s.constants;
  if (opt.constants) apply_constants_override(k, *opt.constants);
  Scenario run = s;
  if (opt.seed) run.seed = *opt.seed;

  RunResult res;
  json& rep = res.report;
  rep["schema"] = "report/1";
  rep["scenario"] = run.name;
  rep["seed"] = run.seed;
  rep["constants"] = {{"C", k.cd.C}, {"D", k.cd.D}, {"empirical", k.empirical}, {"tolerance", k.tolerance}};
  rep["tasks"] = json::array();

  std::map<std::string, FlagComplex> built;
  bool input_error = false, failure = false;
  std::size_t passed = 0, failed = 0, errors = 0;
  const std::string fig_dir = opt.figures_only ? opt.out_dir : (std::filesystem::path(opt.out_dir) / run.figures).string();

  for (std::size_t i = 0; i < run.tasks.size(); ++i) {
    const TaskSpec& t = run.tasks[i];
    if (opt.figures_only && t.kind != "figure-render") continue;
    TaskRun tr(run, opt, k, t, i);
    const auto start = std::chrono::steady_clock::now();
    try {
      const std::string& cname = t.params.at("complex");
      const ComplexSpec& spec =
          *std::find_if(run.complexes.begin(), run.complexes.end(), [&](const ComplexSpec& c) { return c.name == cname; });
      if (!built.count(cname)) built.emplace(cname, build_complex(spec, run.base_dir));
      const FlagComplex& c = built.at(cname);
      tr.rec()["complex"] = {{"name", cname}, {"source", spec.source}, {"vertices", c.size()}};
      if (t.kind == "geodesic-pipeline") {
        geodesic_pipeline(tr, c);
      } else if (t.kind == "goodness-sweep") {
        goodness_sweep(tr, c);
      } else if (t.kind == "displacement-study") {
        displacement_study(tr, c, make_isometry(run, t.params.at("isometry"), c, built));
      } else if (t.kind == "contracting-suite") {
        contracting_suite(tr, c);
      } else if (t.kind == "extendability-study") {
        extendability_study(tr, c, spec);
      } else {
        figure_render(tr, c, fig_dir);
      }
      tr.rec()["status"] = tr.failed() ? "fail" : "pass";
      if (tr.failed()) {
        failure = true;
        ++failed;
        tr.rec()["error"] = {{"code", "TaskFailed"}, {"message", "an asserted bound does not hold"}};
      } else {
        ++passed;
      }
    } catch (const Error& e) {
      tr.rec()["status"] = "error";
      tr.rec()["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
      (is_input_error(e.code()) ? input_error : failure) = true;
      ++errors;
    } catch (const std::exception& e) {
      tr.rec()["status"] = "error";
      tr.rec()["error"] = {{"code", "TaskFailed"}, {"message", e.what()}};
      failure = true;
      ++errors;
    }
    tr.rec()["wall_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep["tasks"].push_back(std::move(tr.rec()));
  }
  res.exit_code = input_error ? 2 : failure ? 1 : 0;
  rep["summary"] = {{"passed", passed}, {"failed", failed}, {"errors", errors}, {"exit_code", res.exit_code}};

  if (opt.write_files && !opt.figures_only) {
    const auto path = std::filesystem::path(opt.out_dir) / run.report;
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream f(path);
    if (!f || !(f << rep.dump(2) << "\n")) {
      rep["summary"]["report_error"] = "cannot write " + path.string();
      res.exit_code = 2;
    }
  }
  return res;
}

}  // namespace syslab
