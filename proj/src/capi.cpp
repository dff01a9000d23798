#include <cstdlib>
#include <cstring>
#include <sstream>

#include "syslab/eplane.hpp"
#include "syslab/error.hpp"
#include "syslab/lab.hpp"
#include "syslab/samples.hpp"
#include "syslab/syslab.h"

struct syslab_complex {
  syslab::FlagComplex c;
};

struct syslab_scenario {
  syslab::Scenario s;
};

namespace {

thread_local std::string last_error;

int fail(int status, const std::string& msg) {
  last_error = msg;
  return status;
}

template <class F>
int guard(F&& f) {
  try {
    last_error.clear();
    f();
    return SYSLAB_OK;
  } catch (const syslab::Error& e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SYSLAB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SYSLAB_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw syslab::Error(syslab::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

syslab::VertexId vertex(const syslab_complex* c, uint32_t v) {
  if (v >= c->c.size()) throw syslab::Error(syslab::ErrorCode::InvalidArgument, "vertex id out of range");
  return syslab::VertexId{v};
}

}  // namespace

extern "C" {

const char* syslab_version(void) { return "0.1.0"; }
const char* syslab_last_error(void) { return last_error.c_str(); }

const char* syslab_status_name(int status) {
  static thread_local std::string name;
  if (status == SYSLAB_OK) return "Ok";
  if (status >= 1 && status <= 26) {
    name = syslab::error_code_name(static_cast<syslab::ErrorCode>(status));
    return name.c_str();
  }
  return "Internal";
}

void syslab_string_free(char* s) { std::free(s); }

int syslab_complex_window(int64_t a, int64_t b, int radius, syslab_complex** out) {
  return guard([&] {
    need(out, "out");
    if (radius < 0) throw syslab::Error(syslab::ErrorCode::InvalidArgument, "radius must be nonnegative");
    *out = new syslab_complex{syslab::window({a, b}, radius)};
  });
}

int syslab_complex_load(const char* path, syslab_complex** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new syslab_complex{syslab::load_complex(path)};
  });
}

int syslab_complex_builtin(const char* kind, int parameter, int radius, syslab_complex** out) {
  return guard([&] {
    need(kind, "kind");
    need(out, "out");
    const std::string k = kind;
    if (k == "tree-T") {
      *out = new syslab_complex{syslab::tree_t(parameter)};
    } else if (k == "octahedron") {
      *out = new syslab_complex{syslab::octahedron()};
    } else if (k == "book" || k == "cone-plane") {
      syslab::ComplexSpec spec{k, k, {{"parameter", std::to_string(parameter)}, {"radius", std::to_string(radius)}}};
      *out = new syslab_complex{syslab::build_complex(spec, ".")};
    } else {
      *out = new syslab_complex{syslab::flat_disk_sample(k)};
    }
  });
}

void syslab_complex_free(syslab_complex* c) { delete c; }

size_t syslab_complex_size(const syslab_complex* c) { return c ? c->c.size() : 0; }

int syslab_vertex(const syslab_complex* c, const char* ref, uint32_t* out) {
  return guard([&] {
    need(c, "complex");
    need(ref, "ref");
    need(out, "out");
    *out = syslab::resolve_vertex(c->c, ref).value;
  });
}

int syslab_vertex_label(const syslab_complex* c, uint32_t v, char** out) {
  return guard([&] {
    need(c, "complex");
    need(out, "out");
    *out = dup(c->c.label(vertex(c, v)));
  });
}

int syslab_distance(const syslab_complex* c, uint32_t x, uint32_t y, int* out) {
  return guard([&] {
    need(c, "complex");
    need(out, "out");
    *out = syslab::distance(c->c, vertex(c, x), vertex(c, y), 1 << 20);
  });
}

int syslab_check_6_large(const syslab_complex* c, int* pass, char** json_out) {
  return guard([&] {
    need(c, "complex");
    const syslab::SixLargeReport r = syslab::check_local_6_large(c->c);
    nlohmann::json j{{"pass", r.pass}, {"vertices_checked", r.vertices_checked}, {"window", c->c.is_window()}};
    if (r.center) {
      j["center"] = c->c.label(*r.center);
      nlohmann::json w = nlohmann::json::array();
      for (auto v : r.witness) w.push_back(c->c.label(v));
      j["witness"] = w;
    }
    if (pass) *pass = r.pass ? 1 : 0;
    if (json_out) *json_out = dup(j.dump());
  });
}

int syslab_euclidean_geodesic(const syslab_complex* c, uint32_t x, uint32_t y, char** json_out) {
  return guard([&] {
    need(c, "complex");
    need(json_out, "json_out");
    const auto e = syslab::euclidean_geodesic(c->c, vertex(c, x), vertex(c, y));
    const auto g = syslab::select_vertex_geodesic(c->c, e);
    nlohmann::json delta = nlohmann::json::array(), path = nlohmann::json::array();
    for (const auto& s : e.delta) {
      nlohmann::json simplex = nlohmann::json::array();
      for (auto v : s) simplex.push_back(c->c.label(v));
      delta.push_back(simplex);
    }
    for (auto v : g) path.push_back(c->c.label(v));
    *json_out = dup(nlohmann::json{{"delta", delta}, {"vertex_geodesic", path}}.dump());
  });
}

int syslab_goodness(const syslab_complex* c, uint32_t x, uint32_t y, int* out) {
  return guard([&] {
    need(c, "complex");
    need(out, "out");
    const auto g = syslab::select_vertex_geodesic(c->c, syslab::euclidean_geodesic(c->c, vertex(c, x), vertex(c, y)));
    *out = syslab::goodness_constant(c->c, g).constant;
  });
}

int syslab_translation_length(const char* isometry_literal, int64_t* out) {
  return guard([&] {
    need(isometry_literal, "literal");
    need(out, "out");
    *out = syslab::translation_length(syslab::parse_isometry(isometry_literal));
  });
}

int syslab_render_svg(const syslab_complex* c, uint32_t x, uint32_t y, char** svg_out) {
  return guard([&] {
    need(c, "complex");
    need(svg_out, "svg_out");
    *svg_out = dup(syslab::render_pipeline_svg(c->c, vertex(c, x), vertex(c, y)));
  });
}

void syslab_run_options_init(syslab_run_options* opt) {
  if (!opt) return;
  *opt = syslab_run_options{1, 0, 0, nullptr, nullptr, 0, 1};
}

int syslab_scenario_load(const char* path, syslab_scenario** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new syslab_scenario{syslab::load_scenario(path)};
  });
}

int syslab_scenario_parse(const char* text, const char* base_dir, syslab_scenario** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in(text);
    *out = new syslab_scenario{syslab::parse_scenario(in, base_dir ? base_dir : ".")};
  });
}

void syslab_scenario_free(syslab_scenario* s) { delete s; }

int syslab_scenario_run(const syslab_scenario* s, const syslab_run_options* opt, char** report_json, int* exit_code) {
  return guard([&] {
    need(s, "scenario");
    syslab::RunOptions o;
    if (opt) {
      o.jobs = opt->jobs;
      if (opt->has_seed) o.seed = opt->seed;
      if (opt->constants) o.constants = opt->constants;
      if (opt->out_dir) o.out_dir = opt->out_dir;
      o.figures_only = opt->figures_only != 0;
      o.write_files = opt->write_files != 0;
    }
    const syslab::RunResult r = syslab::run_scenario(s->s, o);
    if (report_json) *report_json = dup(r.report.dump(2));
    if (exit_code) *exit_code = r.exit_code;
  });
}

}  // extern "C"
