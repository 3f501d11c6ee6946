// Command-line front end: polynomials, minors, restrictions, singular-point
// analysis, and the randomized verification suites.
//
// Exit codes: 0 success, 2 parse/validation error, 3 mathematical-check
// failure (cross-route mismatch, failed verification, failed prediction).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "confpoly/formats.hpp"
#include "confpoly/singular.hpp"
#include "confpoly/verify.hpp"

using nlohmann::json;
using namespace confpoly;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedInput {
  std::optional<Configuration> config;   // direct configuration input
  std::optional<ParsedGraph> graph;      // graph input
  bool is_graph() const { return graph.has_value(); }
};

LoadedInput load_input(const std::string& path) {
  std::string text = read_file(path);
  LoadedInput in;
  if (looks_like_configuration(text)) {
    in.config = parse_configuration(text);
  } else {
    in.graph = parse_graph(text);
  }
  return in;
}

/// The configuration a singular-structure verb works on: a configuration file
/// as-is, a graph's cycle space, or the momentum-extended cycle space.
Configuration analysis_configuration(const LoadedInput& in, const std::string& momentum_path) {
  if (!in.is_graph()) {
    if (!momentum_path.empty()) {
      throw ArgumentError("momentum files apply only to graph inputs");
    }
    return *in.config;
  }
  if (momentum_path.empty()) return h1_configuration(in.graph->graph);
  Momentum p = parse_momentum(read_file(momentum_path), *in.graph);
  return h1p_configuration(in.graph->graph, p);
}

json polynomial_json(const Polynomial& p) {
  json coeffs = json::object();
  for (const auto& [m, c] : p.terms()) coeffs[m.str()] = c.str();
  return json{{"text", p.str()},
              {"degree", p.degree()},
              {"term_count", p.term_count()},
              {"coefficients", coeffs}};
}

void emit_polynomial(const Polynomial& p, const std::vector<std::string>& methods,
                     bool as_json) {
  if (as_json) {
    json out{{"v", 1}, {"methods", methods}, {"polynomial", polynomial_json(p)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
}

std::string subset_label(EdgeSubset s) {
  std::string out;
  for (int i : s.indices()) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return out;
}

int run_psi(const std::string& input, const std::string& method, bool as_json) {
  LoadedInput in = load_input(input);
  std::vector<std::pair<std::string, Polynomial>> results;
  if (in.is_graph()) {
    const Multigraph& g = in.graph->graph;
    if (method == "forests" || method == "all") {
      results.emplace_back("forests", psi_forest_sum(g));
    }
    if (method == "det" || method == "all") {
      results.emplace_back("det", psi_det(h1_configuration(g)));
    }
    if (method == "plucker" || method == "all") {
      results.emplace_back("plucker", psi_plucker(h1_configuration(g)));
    }
  } else {
    if (method == "forests") {
      throw ArgumentError("method 'forests' needs a graph input");
    }
    if (method == "det" || method == "all") results.emplace_back("det", psi_det(*in.config));
    if (method == "plucker" || method == "all") {
      results.emplace_back("plucker", psi_plucker(*in.config));
    }
  }
  if (results.empty()) throw ArgumentError("unknown method: " + method);
  for (const auto& [name, poly] : results) {
    if (poly != results.front().second) {
      throw CheckError("polynomial methods disagree: " + results.front().first + " vs " + name);
    }
  }
  std::vector<std::string> names;
  for (const auto& [name, poly] : results) names.push_back(name);
  emit_polynomial(results.front().second, names, as_json);
  return 0;
}

int run_phi(const std::string& input, const std::string& momentum_path,
            const std::string& method, bool as_json) {
  std::string text = read_file(input);
  if (looks_like_configuration(text)) {
    throw ArgumentError("the second polynomial needs a graph input");
  }
  ParsedGraph pg = parse_graph(text);
  Momentum p = parse_momentum(read_file(momentum_path), pg);
  std::vector<std::pair<std::string, Polynomial>> results;
  if (method == "cutsets" || method == "all") {
    results.emplace_back("cutsets", phi_cutset_sum(pg.graph, p));
  }
  if (method == "config" || method == "all") {
    results.emplace_back("config", phi_config(pg.graph, p));
  }
  if (results.empty()) throw ArgumentError("unknown method: " + method);
  for (const auto& [name, poly] : results) {
    if (poly != results.front().second) {
      throw CheckError("polynomial methods disagree: " + results.front().first + " vs " + name);
    }
  }
  std::vector<std::string> names;
  for (const auto& [name, poly] : results) names.push_back(name);
  emit_polynomial(results.front().second, names, as_json);
  return 0;
}

int run_plucker(const std::string& input, bool as_json) {
  LoadedInput in = load_input(input);
  Configuration w = in.is_graph() ? h1_configuration(in.graph->graph) : *in.config;
  PluckerVector pv = plucker_vector(w);
  if (as_json) {
    json minors = json::object();
    for (const auto& [bits, value] : pv.minors) minors[subset_label(EdgeSubset(bits))] = value.str();
    json out{{"v", 1}, {"n", pv.n}, {"dim", pv.dim}, {"minors", minors}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [bits, value] : pv.minors) {
      std::cout << subset_label(EdgeSubset(bits)) << ": " << value.str() << "\n";
    }
  }
  return 0;
}

int run_restrict(const std::string& input, const std::string& keep_csv, bool as_json) {
  LoadedInput in = load_input(input);
  Configuration w = in.is_graph() ? h1_configuration(in.graph->graph) : *in.config;
  EdgeSubset keep;
  {
    std::istringstream stream(keep_csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
      int idx = 0;
      try {
        idx = std::stoi(item);
      } catch (...) {
        throw ParseError("malformed coordinate index: " + item);
      }
      if (idx < 1 || idx > w.n()) throw ArgumentError("kept coordinate out of range");
      keep.add(idx - 1);
    }
  }
  auto rest = restrict_to(w, keep);
  if (as_json) {
    json out{{"v", 1}, {"kept", subset_label(keep)}};
    if (rest) {
      out["restriction"] = emit_configuration(*rest);
      out["dim"] = rest->dim();
    } else {
      out["restriction"] = nullptr;
      out["dim"] = 0;
    }
    std::cout << out.dump(2) << "\n";
  } else if (rest) {
    std::cout << emit_configuration(*rest);
  } else {
    std::cout << "empty\n";
  }
  return 0;
}

json cone_json(const TangentCone& tc) {
  return json{{"chart", tc.chart + 1},
              {"degree", tc.degree},
              {"affine", polynomial_json(tc.affine)},
              {"projective", polynomial_json(tc.projective)}};
}

int run_analyze(const std::string& input, const std::string& momentum_path,
                const std::string& point_csv, bool want_cone, bool as_json) {
  LoadedInput in = load_input(input);
  Configuration w = analysis_configuration(in, momentum_path);
  Point a = parse_point(point_csv);
  AnalysisReport rep = verify_theorem(w, a, want_cone);
  if (as_json) {
    json pt = json::array();
    for (const auto& x : rep.point) pt.push_back(x.str());
    json out{{"v", 1},
             {"report",
              {{"point", pt},
               {"rank", rep.rank},
               {"corank", rep.corank},
               {"multiplicity", rep.multiplicity},
               {"theorem_ok", rep.theorem_ok}}}};
    if (rep.cone) out["report"]["tangent_cone"] = cone_json(*rep.cone);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "rank: " << rep.rank << "\n";
    std::cout << "corank: " << rep.corank << "\n";
    std::cout << "multiplicity: " << rep.multiplicity << "\n";
    std::cout << "multiplicity equals corank: " << (rep.theorem_ok ? "yes" : "NO") << "\n";
    if (rep.cone) {
      std::cout << "chart: A" << rep.cone->chart + 1 << "\n";
      std::cout << "projective tangent cone: " << rep.cone->projective.str() << "\n";
      std::cout << "affine tangent cone: " << rep.cone->affine.str() << "\n";
    }
  }
  return rep.theorem_ok ? 0 : 3;
}

int run_tangent_cone(const std::string& input, const std::string& momentum_path,
                     const std::string& point_csv, bool as_json) {
  LoadedInput in = load_input(input);
  Configuration w = analysis_configuration(in, momentum_path);
  Point a = parse_point(point_csv);
  TangentCone tc = tangent_cone(w, a);
  if (as_json) {
    json out{{"v", 1}, {"tangent_cone", cone_json(tc)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "chart: A" << tc.chart + 1 << "\n";
    std::cout << "degree: " << tc.degree << "\n";
    std::cout << "projective: " << tc.projective.str() << "\n";
    std::cout << "affine: " << tc.affine.str() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const SuiteOptions& opt, bool as_json) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = kSuiteNames;
  } else {
    names.push_back(suite);
  }
  bool all_pass = true;
  json results = json::array();
  for (const auto& name : names) {
    SuiteResult res = run_suite(name, opt);
    all_pass = all_pass && res.pass();
    if (as_json) {
      results.push_back(json{{"suite", res.name},
                             {"instances", res.instances},
                             {"checks", res.checks},
                             {"failures", res.failures},
                             {"pass", res.pass()}});
    } else {
      std::cout << "suite " << res.name << ": " << (res.pass() ? "PASS" : "FAIL") << " ("
                << res.instances << " instances, " << res.checks << " checks)\n";
      for (const auto& f : res.failures) std::cout << "  " << f << "\n";
    }
  }
  if (as_json) {
    std::cout << json{{"v", 1}, {"results", results}, {"pass", all_pass}}.dump(2) << "\n";
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("CONFPOLY_THREADS")) {
#ifdef _OPENMP
    int t = std::atoi(threads);
    if (t >= 1) omp_set_num_threads(t);
#else
    (void)threads;
#endif
  }

  CLI::App app{"exact arithmetic for graph and configuration polynomials"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output (applies to every verb)");

  std::string input, momentum_path, method = "all", point_csv, keep_csv, suite;
  bool want_cone = false;
  SuiteOptions sopt;

  auto* psi_cmd = app.add_subcommand("psi", "first polynomial of a graph or configuration");
  psi_cmd->add_option("input", input, "graph or configuration file")->required();
  psi_cmd->add_option("--method", method, "forests|det|plucker|all (default all)");

  auto* phi_cmd = app.add_subcommand("phi", "second polynomial of a graph with momentum");
  phi_cmd->add_option("input", input, "graph file")->required();
  phi_cmd->add_option("--momentum", momentum_path, "momentum file")->required();
  phi_cmd->add_option("--method", method, "cutsets|config|all (default all)");

  auto* plu_cmd = app.add_subcommand("plucker", "maximal minors of a configuration");
  plu_cmd->add_option("input", input, "graph or configuration file")->required();

  auto* res_cmd = app.add_subcommand("restrict", "restriction to kept coordinates");
  res_cmd->add_option("input", input, "graph or configuration file")->required();
  res_cmd->add_option("--keep", keep_csv, "1-based kept coordinates, comma separated")
      ->required();

  auto* ana_cmd = app.add_subcommand("analyze", "rank, multiplicity and their match at a point");
  ana_cmd->add_option("input", input, "graph or configuration file")->required();
  ana_cmd->add_option("--momentum", momentum_path, "momentum file (graph inputs only)");
  ana_cmd->add_option("--point", point_csv, "evaluation point, comma separated")->required();
  ana_cmd->add_flag("--tangent-cone", want_cone, "attach the tangent cone");

  auto* tc_cmd = app.add_subcommand("tangent-cone", "tangent cone at a hypersurface point");
  tc_cmd->add_option("input", input, "graph or configuration file")->required();
  tc_cmd->add_option("--momentum", momentum_path, "momentum file (graph inputs only)");
  tc_cmd->add_option("--point", point_csv, "base point, comma separated")->required();

  auto* ver_cmd = app.add_subcommand("verify", "randomized verification suites");
  ver_cmd->add_option("suite", suite,
                      "matrixtree|secondpoly|restriction|theorem|cones|generic|all")
      ->required();
  ver_cmd->add_option("--seed", sopt.seed, "random seed (default 7)");
  ver_cmd->add_option("--trials", sopt.trials, "instances per suite (default 50)");
  ver_cmd->add_option("--max-edges", sopt.max_edges, "edge cap for random graphs (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (psi_cmd->parsed()) return run_psi(input, method, as_json);
    if (phi_cmd->parsed()) {
      if (method == "forests" || method == "det" || method == "plucker") {
        throw ArgumentError("unknown method for the second polynomial: " + method);
      }
      return run_phi(input, momentum_path, method, as_json);
    }
    if (plu_cmd->parsed()) return run_plucker(input, as_json);
    if (res_cmd->parsed()) return run_restrict(input, keep_csv, as_json);
    if (ana_cmd->parsed()) return run_analyze(input, momentum_path, point_csv, want_cone, as_json);
    if (tc_cmd->parsed()) return run_tangent_cone(input, momentum_path, point_csv, as_json);
    if (ver_cmd->parsed()) return run_verify(suite, sopt, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 3;
  } catch (const SamplingError& e) {
    std::cerr << "sampling failed: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
