#include <doctest.h>

#include <sstream>

#include "syslab/eplane.hpp"
#include "syslab/error.hpp"
#include "syslab/lab.hpp"
#include "syslab/samples.hpp"

using namespace syslab;

namespace {

Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in, ".");
}

ErrorCode parse_code(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Overflow;  // stands for "no error"
}

void strip_timing(nlohmann::json& rep) {
  for (auto& t : rep["tasks"]) t.erase("wall_ms");
}

const char* kPipeline = R"(
[scenario]
name = demo
seed = 5

[complex plane]
source = eplane
radius = 10

[task a]
kind = geodesic-pipeline
complex = plane
x = 0,0
y = 4,2

[task sweep]
kind = goodness-sweep
complex = plane
pairs = 12
max_distance = 6

[task fig]
kind = figure-render
complex = plane
x = 0,0
y = 4,2
)";

}  // namespace

TEST_CASE("scenario parsing") {
  const Scenario s = parse(kPipeline);
  CHECK(s.name == "demo");
  CHECK(s.seed == 5);
  REQUIRE(s.tasks.size() == 3);
  CHECK(s.tasks[0].kind == "geodesic-pipeline");
  CHECK(s.tasks[1].params.at("pairs") == "12");
  CHECK(s.report == "demo.report.json");
  CHECK(s.constants.cd.C == 200);
  CHECK(s.constants.cd.D == 600);

  CHECK(parse_code("[scenario]\nname = x\n[task t]\nkind = goodness-sweep\ncomplex = nowhere\n") ==
        ErrorCode::ParseError);
  CHECK(parse_code("[scenario]\nname = x\n[complex p]\nsource = eplane\n[task t]\nkind = teleport\ncomplex = p\n") ==
        ErrorCode::ParseError);
  CHECK(parse_code("[complex p]\nsource = eplane\n") == ErrorCode::ParseError);  // no header
  CHECK(parse_code("[scenario]\nname = x\n[constants]\nC = 1\n") == ErrorCode::ParseError);
  CHECK(parse_code("[scenario]\nname = x\n[constants]\nC = 1\nD = 3\nempirical = true\n") == ErrorCode::Overflow);
  CHECK(parse_code("[scenario]\nname = x\nseed = many\n") == ErrorCode::ParseError);
  CHECK(parse_code("[scenario\nname = x\n") == ErrorCode::ParseError);
  CHECK(parse_code("[scenario]\nname = x\n[complex p]\nsource = eplane\n[task t]\nkind = goodness-sweep\n"
                   "complex = p\ncolour = red\n") == ErrorCode::ParseError);
  CHECK(parse_code("[scenario]\nname = x\n[complex p]\nsource = eplane\n[task t]\nkind = displacement-study\n"
                   "complex = p\n") == ErrorCode::ParseError);
  CHECK(parse_code("[scenario]\nname = x\n[isometry g]\nliteral = spin(2)\n") == ErrorCode::ParseError);

  ScenarioConstants k;
  apply_constants_override(k, "C=150,D=450");
  CHECK(k.cd.C == 150);
  CHECK(k.empirical);
  CHECK_THROWS_AS(apply_constants_override(k, "E=3"), Error);
}

TEST_CASE("vertex references") {
  const FlagComplex w = window({0, 0}, 3);
  CHECK(w.coord(resolve_vertex(w, "2,-1")) == AxialCoord{2, -1});
  CHECK(w.coord(resolve_vertex(w, "(1, 1)")) == AxialCoord{1, 1});
  CHECK(resolve_vertex(w, "#4") == VertexId{4});
  CHECK_THROWS_AS(resolve_vertex(w, "9,9"), Error);
  const FlagComplex t = tree_t(4);
  CHECK(t.label(resolve_vertex(t, "3")) == "3");
  CHECK(t.label(resolve_vertex(t, "[4,2,0]")) == "[4,2,0]");
  CHECK_THROWS_AS(resolve_vertex(t, "[9,9,0]"), Error);
}

TEST_CASE("tree extendability") {
  const FlagComplex t = tree_t(10);
  const VertexId o = resolve_vertex(t, "0");
  const auto rays = tree_rays(t, o);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0].size() == 12);  // the half-line 0..11
  for (int n = 2; n <= 10; ++n)
    CHECK(ray_distance(t, resolve_vertex(t, "[" + std::to_string(n) + "," + std::to_string(n) + ",0]"), rays) == n);
  CHECK(ray_distance(t, resolve_vertex(t, "7"), rays) == 0);
  CHECK(ray_distance(t, resolve_vertex(t, "[6,2,0]"), rays) == 2);
  // from a branch tip the only ray climbs back to the spine first
  const auto from_tip = tree_rays(t, resolve_vertex(t, "[3,3,0]"));
  REQUIRE(from_tip.size() == 1);
  CHECK(ray_distance(t, resolve_vertex(t, "1"), from_tip) == 2);
}

TEST_CASE("plane rays") {
  const FlagComplex w = window({0, 0}, 12);
  const VertexId x = w.at({0, 0});
  const VertexPath r = plane_ray(w, x, w.at({2, 1}));
  CHECK(is_geodesic(w, r));
  CHECK(r.front() == x);
  CHECK(r.size() > 6);
  CHECK(ray_distance(w, w.at({2, 1}), {r}) <= 1);
  CHECK(ray_distance(w, w.at({0, 0}), {plane_ray(w, x, x)}) == 0);
}

TEST_CASE("figures are deterministic") {
  const FlagComplex w = window({0, 0}, 10);
  const std::string a = render_pipeline_svg(w, w.at({0, 0}), w.at({4, 2}));
  CHECK(a == render_pipeline_svg(window({0, 0}, 10), w.at({0, 0}), w.at({4, 2})));
  CHECK(a.find("id=\"disk-0\"") != std::string::npos);
  CHECK(a.find("id=\"alpha-0\"") != std::string::npos);
  CHECK(a.find("id=\"delta\"") != std::string::npos);
  const std::string line = render_pipeline_svg(w, w.at({0, 0}), w.at({3, 0}));
  CHECK(line.find("id=\"disk-") == std::string::npos);
  CHECK(line.find("-0.000000") == std::string::npos);
  CHECK_THROWS_AS(render_pipeline_svg(tree_t(3), VertexId{0}, VertexId{1}), Error);
}

TEST_CASE("runs are reproducible and independent of the job count") {
  const Scenario s = parse(kPipeline);
  RunOptions one;
  one.write_files = false;
  RunOptions many = one;
  many.jobs = 3;
  RunResult a = run_scenario(s, one), b = run_scenario(s, many);
  CHECK(a.exit_code == 0);
  CHECK(a.report["schema"] == "report/1");
  strip_timing(a.report);
  strip_timing(b.report);
  CHECK(a.report == b.report);

  RunOptions reseeded = one;
  reseeded.seed = 6;
  RunResult c = run_scenario(s, reseeded);
  strip_timing(c.report);
  CHECK(c.report["seed"] == 6);
  CHECK(c.report["tasks"][1]["outputs"] != a.report["tasks"][1]["outputs"]);

  const auto& pipe = a.report["tasks"][0];
  CHECK(pipe["status"] == "pass");
  CHECK(pipe["outputs"]["distance"] == 6);
  CHECK(pipe["outputs"]["thick_intervals"] == nlohmann::json::array({nlohmann::json::array({2, 4})}));
  for (const auto& as : pipe["assertions"]) {
    CHECK(as.contains("constant"));
    CHECK(as.contains("measured"));
  }
}

TEST_CASE("failing bounds and bad input") {
  Scenario s = parse(R"(
[scenario]
name = tight
[complex book]
source = book
parameter = 3
radius = 10
[constants]
C = 1
D = 3
empirical = true
[task sweep]
kind = goodness-sweep
complex = book
pairs = 300
min_distance = 7
max_distance = 9
)");
  s.seed = 4;
  RunOptions opt;
  opt.write_files = false;
  const RunResult r = run_scenario(s, opt);
  CHECK(r.exit_code == 1);
  const auto& task = r.report["tasks"][0];
  CHECK(task["status"] == "fail");
  CHECK(task["error"]["code"] == "TaskFailed");
  const auto& as = task["assertions"][0];
  CHECK_FALSE(as["pass"].get<bool>());
  CHECK(as["measured"].get<double>() > 1);
  CHECK(as["witness"].contains("x"));
  CHECK(as["witness"].contains("y"));

  const Scenario bad = parse(R"(
[scenario]
name = bad
[complex plane]
source = eplane
radius = 4
[task a]
kind = geodesic-pipeline
complex = plane
x = 0,0
y = 9,9
[task b]
kind = geodesic-pipeline
complex = plane
x = 0,0
y = 2,1
)");
  const RunResult rb = run_scenario(bad, opt);
  CHECK(rb.exit_code == 2);
  CHECK(rb.report["tasks"][0]["status"] == "error");
  CHECK(rb.report["tasks"][1]["status"] == "pass");  // later tasks still run

  RunOptions loose = opt;
  loose.constants = "C=nope";
  CHECK_THROWS_AS(run_scenario(parse(kPipeline), loose), Error);
}

TEST_CASE("displacement study report") {
  const Scenario s = parse(R"(
[scenario]
name = glide
seed = 61
[complex plane]
source = eplane
radius = 20
[isometry g]
literal = glide(1,1)
[task minset]
kind = displacement-study
complex = plane
isometry = g
pairs = 10
max_distance = 20
ks = 2,3
central_x = 0,0
central_n = 3
[task rot]
kind = displacement-study
complex = plane
isometry = r
[isometry r]
literal = rot60^1
)");
  RunOptions opt;
  opt.write_files = false;
  const RunResult r = run_scenario(s, opt);
  const auto& t = r.report["tasks"][0];
  CHECK(t["status"] == "pass");
  CHECK(t["outputs"]["translation_length"] == 2);
  CHECK(t["outputs"]["pairs_measured"] == 10);
  CHECK(t["outputs"]["displacement_set_sizes"]["2"].get<int>() < t["outputs"]["displacement_set_sizes"]["3"].get<int>());
  CHECK(t["assertions"][0]["constant"] == "9L+6");
  CHECK(t["assertions"][0]["bound"] == 24.0);
  CHECK(r.report["tasks"][1]["status"] == "error");
  CHECK(r.report["tasks"][1]["error"]["code"] == "PreconditionViolated");
  CHECK(r.exit_code == 1);
}
