#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "syslab/error.hpp"
#include "syslab/lab.hpp"

namespace syslab {

namespace pt = boost::property_tree;

const std::vector<std::string> kTaskKinds{"geodesic-pipeline",   "goodness-sweep",      "displacement-study",
                                          "contracting-suite",   "extendability-study", "figure-render"};

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Params flat(const pt::ptree& sec, const std::string& where) {
  Params out;
  for (const auto& [k, v] : sec) {
    if (!v.empty()) bad(where + ": nested key '" + k + "'");
    out[k] = v.data();
  }
  return out;
}

std::string take(Params& p, const std::string& key, const std::string& where) {
  auto it = p.find(key);
  if (it == p.end() || it->second.empty()) bad(where + ": missing '" + key + "'");
  std::string v = it->second;
  p.erase(it);
  return v;
}

std::string take_or(Params& p, const std::string& key, std::string fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  std::string v = it->second;
  p.erase(it);
  return v;
}

void no_leftovers(const Params& p, const std::string& where) {
  if (!p.empty()) bad(where + ": unknown key '" + p.begin()->first + "'");
}

long long to_int(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) bad(where + ": '" + s + "' is not an integer");
  return v;
}

bool to_bool(const std::string& s, const std::string& where) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  bad(where + ": '" + s + "' is not a boolean");
}

// Keys each task kind accepts beyond "kind" and "complex".
const std::map<std::string, std::set<std::string>> kTaskKeys{
    {"geodesic-pipeline", {"x", "y"}},
    {"goodness-sweep", {"pairs", "min_distance", "max_distance"}},
    {"displacement-study", {"isometry", "pairs", "max_distance", "ks", "central_x", "central_n", "stride", "n_max",
                            "axis_length"}},
    {"contracting-suite", {"origin", "pairs", "max_length", "cs", "doubling_pairs"}},
    {"extendability-study", {"x", "depth", "targets", "pairs", "bound"}},
    {"figure-render", {"x", "y", "file"}},
};

void check_floors(const ScenarioConstants& k, const std::string& where) {
  if (k.cd.C < 0 || k.cd.D < 0) bad(where + ": constants must be nonnegative");
  if (!k.empirical && (k.cd.C < 200 || k.cd.D < 600))
    bad(where + ": C >= 200 and D >= 600 unless 'empirical = true'");
}

}  // namespace

void apply_constants_override(ScenarioConstants& k, const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    const std::string key = item.substr(0, eq);
    if (eq == std::string::npos) {
      if (key == "empirical") {
        k.empirical = true;
        continue;
      }
      bad("--constants: expected KEY=VALUE, got '" + item + "'");
    }
    const std::string val = item.substr(eq + 1);
    if (key == "C") {
      k.cd.C = static_cast<int>(to_int(val, "--constants"));
    } else if (key == "D") {
      k.cd.D = static_cast<int>(to_int(val, "--constants"));
    } else if (key == "tolerance") {
      try {
        k.tolerance = std::stod(val);
      } catch (const std::exception&) {
        bad("--constants: bad tolerance '" + val + "'");
      }
    } else {
      bad("--constants: unknown constant '" + key + "'");
    }
  }
  k.empirical = true;  // an explicit override is a deliberate experiment
  check_floors(k, "--constants");
}

Scenario parse_scenario(std::istream& in, const std::string& base_dir) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    bad("line " + std::to_string(e.line()) + ": " + e.message());
  }
  Scenario s;
  s.base_dir = base_dir;
  std::set<std::string> names;
  bool have_header = false;
  for (const auto& [head, sec] : tree) {
    if (sec.empty()) bad("key '" + head + "' outside any section");
    std::istringstream hs(head);
    std::string type, name, extra;
    hs >> type >> name >> extra;
    if (!extra.empty()) bad("[" + head + "]: section names are one word");
    Params p = flat(sec, "[" + head + "]");
    const std::string where = "[" + head + "]";
    const bool named = type == "complex" || type == "isometry" || type == "task";
    if (named && name.empty()) bad(where + ": section needs a name");
    if (!named && !name.empty()) bad(where + ": unexpected name");
    if (named && !names.insert(type + " " + name).second) bad(where + ": duplicate section");

    if (type == "scenario") {
      have_header = true;
      s.name = take(p, "name", where);
      s.seed = static_cast<std::uint64_t>(to_int(take_or(p, "seed", "1"), where));
    } else if (type == "complex") {
      ComplexSpec c{name, take(p, "source", where), {}};
      static const std::set<std::string> sources{"eplane", "file", "tree-T", "disk", "book", "cone-plane"};
      if (!sources.count(c.source)) bad(where + ": unknown source '" + c.source + "'");
      c.params = p;
      p.clear();
      s.complexes.push_back(std::move(c));
    } else if (type == "isometry") {
      IsometrySpec iso{name, take_or(p, "literal", ""), take_or(p, "perm", ""), take_or(p, "complex", "")};
      if (iso.literal.empty() == iso.perm.empty()) bad(where + ": give exactly one of 'literal' or 'perm'");
      if (!iso.literal.empty()) {
        try {
          parse_isometry(iso.literal);
        } catch (const Error& e) {
          bad(where + ": " + e.what());
        }
      } else if (iso.complex.empty()) {
        bad(where + ": a permutation needs 'complex'");
      }
      s.isometries.push_back(std::move(iso));
    } else if (type == "constants") {
      s.constants.cd.C = static_cast<int>(to_int(take_or(p, "C", "200"), where));
      s.constants.cd.D = static_cast<int>(to_int(take_or(p, "D", "600"), where));
      s.constants.empirical = to_bool(take_or(p, "empirical", "false"), where);
      const std::string tol = take_or(p, "tolerance", "1e-9");
      try {
        s.constants.tolerance = std::stod(tol);
      } catch (const std::exception&) {
        bad(where + ": bad tolerance '" + tol + "'");
      }
    } else if (type == "task") {
      TaskSpec t{name, take(p, "kind", where), {}};
      auto keys = kTaskKeys.find(t.kind);
      if (keys == kTaskKeys.end()) bad(where + ": unknown task kind '" + t.kind + "'");
      t.params["complex"] = take(p, "complex", where);
      for (auto it = p.begin(); it != p.end();) {
        if (!keys->second.count(it->first)) bad(where + ": '" + it->first + "' is not a " + t.kind + " key");
        t.params.insert(*it);
        it = p.erase(it);
      }
      s.tasks.push_back(std::move(t));
    } else if (type == "output") {
      s.report = take_or(p, "report", "");
      s.figures = take_or(p, "figures", "");
    } else {
      bad(where + ": unknown section type '" + type + "'");
    }
    no_leftovers(p, where);
  }
  if (!have_header) bad("missing [scenario] section");
  check_floors(s.constants, "[constants]");
  auto declared = [&](const std::string& kind, const std::string& n) { return names.count(kind + " " + n) > 0; };
  for (const IsometrySpec& iso : s.isometries)
    if (!iso.complex.empty() && !declared("complex", iso.complex))
      bad("[isometry " + iso.name + "]: unknown complex '" + iso.complex + "'");
  for (const TaskSpec& t : s.tasks) {
    if (!declared("complex", t.params.at("complex")))
      bad("[task " + t.name + "]: unknown complex '" + t.params.at("complex") + "'");
    if (auto it = t.params.find("isometry"); it != t.params.end() && !declared("isometry", it->second))
      bad("[task " + t.name + "]: unknown isometry '" + it->second + "'");
    if (t.kind == "displacement-study" && !t.params.count("isometry"))
      bad("[task " + t.name + "]: missing 'isometry'");
  }
  if (s.report.empty()) s.report = s.name + ".report.json";
  if (s.figures.empty()) s.figures = "figures";
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_scenario(in, dir.empty() ? "." : dir.string());
}

}  // namespace syslab
