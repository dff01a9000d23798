#pragma once

// Scenario files, the task runner and its JSON report, figure rendering and the
// extendability study. Everything the command-line tool does lives here.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "syslab/isometry_dyn.hpp"

namespace syslab {

using Params = std::map<std::string, std::string>;

struct ComplexSpec {
  std::string name;
  std::string source;  // eplane | file | tree-T | disk | book | cone-plane
  Params params;
};

struct IsometrySpec {
  std::string name;
  std::string literal;  // plane literal, or empty
  std::string perm;     // permutation file, or empty
  std::string complex;  // complex the table belongs to
};

struct TaskSpec {
  std::string name;
  std::string kind;
  Params params;
};

struct ScenarioConstants {
  Constants cd;
  bool empirical = false;  // allow C < 200 or D < 600
  double tolerance = 1e-9;
};

struct Scenario {
  std::string name;
  std::uint64_t seed = 1;
  std::string base_dir;  // relative paths resolve against this
  std::vector<ComplexSpec> complexes;
  std::vector<IsometrySpec> isometries;
  ScenarioConstants constants;
  std::vector<TaskSpec> tasks;
  std::string report;   // output path, relative to the output directory
  std::string figures;  // figure directory, relative to the output directory
};

extern const std::vector<std::string> kTaskKinds;

// INI-style: [scenario], [complex NAME], [isometry NAME], [constants],
// [task NAME], [output]; "key = value" lines; ';' starts a comment line.
// ParseError with the offending line or key.
Scenario parse_scenario(std::istream& in, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& path);

// "C=150,D=450" or "C=1,empirical"; explicit overrides count as empirical.
void apply_constants_override(ScenarioConstants& k, const std::string& text);

struct RunOptions {
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> constants;  // override text
  std::string out_dir = ".";
  bool figures_only = false;  // run only figure-render tasks
  bool write_files = true;
};

struct RunResult {
  nlohmann::json report;  // schema report/1
  int exit_code = 0;      // 0 all pass, 1 assertion or task failure, 2 input error
};

// Runs every task in order; later tasks still run after a failure. Input errors
// (unknown complex, bad vertex) mark the report and give exit code 2.
RunResult run_scenario(const Scenario& s, const RunOptions& opt);

// Vertex by "a,b" (plane-backed), label, or "#id".
VertexId resolve_vertex(const FlagComplex& c, const std::string& text);

FlagComplex build_complex(const ComplexSpec& spec, const std::string& base_dir);

// Geodesic-pipeline figure for x, y on a plane-backed complex; NotPlaneBacked otherwise.
std::string render_pipeline_svg(const FlagComplex& c, VertexId x, VertexId y);

// Rays from x in the tree T: geodesics from x to its last half-line vertex,
// which stands for the unbounded end.
std::vector<VertexPath> tree_rays(const FlagComplex& tree, VertexId x);
// Selected vertex geodesic from x through the direction of y, continued to the
// edge of a plane window.
VertexPath plane_ray(const FlagComplex& w, VertexId x, VertexId y);
// Least E such that one of the rays passes within E of y.
int ray_distance(const FlagComplex& c, VertexId y, const std::vector<VertexPath>& rays);

// Runs fn(i) for i in [0, n) over `jobs` threads; exceptions are rethrown in index order.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace syslab
