// Command-line front end. Talks to the library only through syslab.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "syslab/syslab.h"

namespace {

constexpr int kInputError = 2;

int report_failure(int status) {
  std::cerr << "syslab: " << syslab_last_error() << "\n";
  const bool input = status == SYSLAB_PARSE_ERROR || status == SYSLAB_INVALID_ARGUMENT || status == SYSLAB_IO_ERROR;
  return input ? kInputError : 1;
}

void print_summary(const nlohmann::json& rep, bool quiet) {
  for (const auto& t : rep["tasks"]) {
    const std::string status = t["status"];
    std::printf("%-5s %-24s %s\n", status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "ERROR",
                t["name"].get<std::string>().c_str(), t["kind"].get<std::string>().c_str());
    for (const auto& a : t["assertions"]) {
      if (quiet && a["pass"].get<bool>()) continue;
      std::printf("      %s %s: measured %s, bound %s (%s)\n", a["pass"].get<bool>() ? "ok  " : "FAIL",
                  a["constant"].get<std::string>().c_str(), a["measured"].dump().c_str(), a["bound"].dump().c_str(),
                  a["name"].get<std::string>().c_str());
      if (!a["pass"].get<bool>() && a.contains("witness")) std::printf("      witness %s\n", a["witness"].dump().c_str());
    }
    if (t.contains("error") && status == "error")
      std::printf("      %s\n", t["error"]["message"].get<std::string>().c_str());
  }
  const auto& s = rep["summary"];
  std::printf("%d passed, %d failed, %d errors\n", s["passed"].get<int>(), s["failed"].get<int>(),
              s["errors"].get<int>());
}

int run(const std::string& path, syslab_run_options& opt, bool quiet) {
  syslab_scenario* scn = nullptr;
  if (int st = syslab_scenario_load(path.c_str(), &scn)) return report_failure(st);
  char* json = nullptr;
  int exit_code = 0;
  const int st = syslab_scenario_run(scn, &opt, &json, &exit_code);
  syslab_scenario_free(scn);
  if (st) return report_failure(st);
  const auto rep = nlohmann::json::parse(json);
  syslab_string_free(json);
  print_summary(rep, quiet);
  return exit_code;
}

int check(const std::string& path) {
  syslab_complex* c = nullptr;
  if (int st = syslab_complex_load(path.c_str(), &c)) return report_failure(st);
  int pass = 0;
  char* json = nullptr;
  const int st = syslab_check_6_large(c, &pass, &json);
  syslab_complex_free(c);
  if (st) return report_failure(st);
  const auto rep = nlohmann::json::parse(json);
  syslab_string_free(json);
  std::printf("%s: %s (%zu vertex links checked)\n", path.c_str(), pass ? "locally 6-large" : "NOT locally 6-large",
              rep["vertices_checked"].get<std::size_t>());
  if (!pass) std::printf("induced cycle in the link of %s: %s\n", rep["center"].get<std::string>().c_str(),
                         rep["witness"].dump().c_str());
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Systolic geodesics lab: scenario runner, figure renderer and complex checker"};
  app.require_subcommand(1);

  int jobs = 1;
  std::string constants, out_dir = ".";
  std::uint64_t seed = 0;
  bool quiet = false;
  std::string scenario, complex_file;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", jobs, "worker threads for pair sweeps")->envname("SYSLAB_JOBS")->check(CLI::PositiveNumber);
    sub->add_option("--constants", constants, "override constants, e.g. C=150,D=450");
    sub->add_option("--seed", seed, "override the scenario seed");
  };

  auto* run_cmd = app.add_subcommand("run", "run every task of a scenario and write its report");
  run_cmd->add_option("scenario", scenario, "scenario file")->required();
  run_cmd->add_option("--out,-o", out_dir, "output directory for the report and figures");
  run_cmd->add_flag("--quiet,-q", quiet, "only print failing assertions");
  common(run_cmd);

  auto* render_cmd = app.add_subcommand("render", "render the figure tasks of a scenario");
  render_cmd->add_option("scenario", scenario, "scenario file")->required();
  render_cmd->add_option("--out,-o", out_dir, "directory for the SVG files")->required();
  common(render_cmd);

  auto* check_cmd = app.add_subcommand("check", "check that every vertex link of a complex is 6-large");
  check_cmd->add_option("complex", complex_file, "flagcomplex v1 file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*check_cmd) return check(complex_file);

  syslab_run_options opt;
  syslab_run_options_init(&opt);
  opt.jobs = jobs;
  opt.out_dir = out_dir.c_str();
  if (!constants.empty()) opt.constants = constants.c_str();
  if (run_cmd->count("--seed") || render_cmd->count("--seed")) {
    opt.has_seed = 1;
    opt.seed = seed;
  }
  opt.figures_only = *render_cmd ? 1 : 0;
  return run(scenario, opt, quiet);
}
