// specmatch: distance signless Laplacian spectra, matching thresholds and
// verification sweeps on the command line.
//
// Exit codes: 0 success/consistent, 1 counterexample found,
//             2 usage/input error, 3 precondition violation (e.g. disconnected).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "specmatch/graph.hpp"
#include "specmatch/matching.hpp"
#include "specmatch/spectral.hpp"
#include "specmatch/thresholds.hpp"
#include "specmatch/verifier.hpp"

namespace {

using nlohmann::json;
using namespace specmatch;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::string read_input(const std::string& file) {
  if (file.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open input file '" + file + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& file, const std::string& format) {
  const std::string text = read_input(file);
  if (format == "edgelist") return parse_edge_list(text);
  return parse_graph6(text);
}

std::string fmt10(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

int default_workers() {
  if (const char* env = std::getenv("SPECMATCH_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // resolved to hardware concurrency downstream
}

Bipartition resolve_bipartition(const Graph& g, const std::string& spec) {
  if (spec == "auto") {
    auto b = two_color_bipartition(g);
    if (!b) throw std::invalid_argument("graph admits no 2-colouring (odd cycle)");
    return *b;
  }
  Bipartition b;
  std::stringstream ss(spec);
  std::string item;
  std::vector<bool> in_left(static_cast<std::size_t>(g.order()), false);
  while (std::getline(ss, item, ',')) {
    const int v = std::stoi(item);
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("bipartition vertex out of range: " + item);
    in_left[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < g.order(); ++v)
    (in_left[static_cast<std::size_t>(v)] ? b.left : b.right).push_back(v);
  if (!is_valid_bipartition(g, b))
    throw std::invalid_argument("given vertex list is not one side of a bipartition");
  return b;
}

int cmd_spectrum(const std::string& file, const std::string& format, bool as_json,
                 bool with_matrix) {
  const Graph g = load_graph(file, format);
  const SquareMatrix q = dsl_matrix(g);  // throws DisconnectedError
  const Spectrum spectrum = eigenvalues_symmetric(q);
  if (as_json) {
    json j{{"eta1", spectrum.radius()}, {"spectrum", spectrum.eigenvalues}};
    if (with_matrix) {
      json rows = json::array();
      for (int i = 0; i < q.order(); ++i) {
        json row = json::array();
        for (int k = 0; k < q.order(); ++k) row.push_back(q(i, k));
        rows.push_back(std::move(row));
      }
      j["matrix"] = std::move(rows);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "eta1 = " << fmt10(spectrum.radius()) << '\n';
    std::cout << "spectrum =";
    for (double v : spectrum.eigenvalues) std::cout << ' ' << fmt10(v);
    std::cout << '\n';
    if (with_matrix) {
      std::cout << "Q =\n";
      for (int i = 0; i < q.order(); ++i) {
        for (int k = 0; k < q.order(); ++k) std::cout << (k ? " " : "") << fmt10(q(i, k));
        std::cout << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_threshold(int theorem, int n, bool as_json) {
  double value = 0.0;
  std::string branch;
  if (theorem == 1) {
    value = theorem1_threshold(n);
    branch = (n == 4 || n >= 12) ? "theta" : "split";
  } else {
    value = kappa(n);
    branch = "kappa";
  }
  if (as_json) {
    std::cout << json{{"theorem", theorem}, {"n", n}, {"threshold", value}, {"branch", branch}}.dump(2)
              << '\n';
  } else {
    std::cout << "threshold = " << fmt10(value) << " (theorem " << theorem << ", n = " << n
              << ", branch: " << branch << ")\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& file, const std::string& format, int theorem,
              const std::string& bipartition, double tol, bool as_json) {
  const Graph g = load_graph(file, format);
  CheckReport report;
  if (theorem == 1) {
    report = check_theorem1(g, tol);
  } else {
    report = check_theorem2(g, resolve_bipartition(g, bipartition), tol);
  }
  if (as_json) {
    std::cout << json{{"graph_id", report.graph_id},
                      {"eta1", report.eta1},
                      {"threshold", report.threshold},
                      {"below_threshold", report.below_threshold},
                      {"has_pm", report.has_pm},
                      {"verdict", std::string(verdict_name(report.verdict))}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "verdict = " << verdict_name(report.verdict) << " (eta1 = " << fmt10(report.eta1)
              << ", threshold = " << fmt10(report.threshold)
              << ", perfect_matching = " << (report.has_pm ? "true" : "false") << ")\n";
  }
  return report.verdict == Verdict::counterexample ? kExitCounterexample : kExitOk;
}

int cmd_verify(const std::string& config_file, int workers, double tol, bool tol_set,
               const std::string& csv_file) {
  std::ifstream in(config_file);
  if (!in) throw std::invalid_argument("cannot open config file '" + config_file + "'");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  CampaignConfig cfg = parse_campaign_config(text);
  if (workers > 0) cfg.workers = workers;
  if (tol_set) cfg.tolerance = tol;
  cfg.collect_reports = !csv_file.empty();

  const CampaignSummary summary = run_campaign(cfg);
  std::cout << summary_to_json(summary) << '\n';
  if (!csv_file.empty()) {
    std::ofstream csv(csv_file);
    if (!csv) throw std::invalid_argument("cannot open CSV output file '" + csv_file + "'");
    csv << reports_to_csv(summary.all_reports);
  }
  return summary.clean(cfg.tolerance) ? kExitOk : kExitCounterexample;
}

int cmd_extremal(const std::string& family, int n, int s, int k) {
  Graph g(1);
  if (family == "g4") {
    g = build_g4(n);
  } else if (family == "g5") {
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("family g5 takes the total order n = 2s+2 (even, >= 4)");
    g = build_g5(n / 2 - 1);
  } else {
    if (s <= 0) throw std::invalid_argument("family gamma requires --s");
    g = build_gamma(n, s, k > 0 ? k : s - 1).graph;
  }
  std::cout << to_graph6(g) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance signless Laplacian spectra and perfect-matching thresholds"};
  app.require_subcommand(1);

  std::string file, format = "graph6", bipartition = "auto", config_file, csv_file;
  std::string family;
  bool as_json = false, with_matrix = false;
  int theorem = 1, n = 0, s = 0, k = 0;
  int workers = default_workers();
  double tol = 1e-9;

  auto* sp = app.add_subcommand("spectrum", "print eta1 and the full spectrum of Q");
  sp->add_option("--file", file, "input file (default: stdin)");
  sp->add_option("--format", format, "graph6 | edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
  sp->add_flag("--json", as_json, "emit JSON");
  sp->add_flag("--matrix", with_matrix, "also dump the Q matrix");

  auto* th = app.add_subcommand("threshold", "print the sufficient-condition threshold");
  th->add_option("--theorem", theorem, "1 (general) or 2 (balanced bipartite)")
      ->check(CLI::IsMember({1, 2}));
  th->add_option("--n", n, "order (theorem 1) or side size (theorem 2)")->required();
  th->add_flag("--json", as_json, "emit JSON");

  auto* ck = app.add_subcommand("check", "classify one graph against a condition");
  ck->add_option("--file", file, "input file (default: stdin)");
  ck->add_option("--format", format, "graph6 | edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
  ck->add_option("--theorem", theorem, "1 or 2")->check(CLI::IsMember({1, 2}));
  ck->add_option("--bipartition", bipartition,
                 "auto, or comma-separated vertex list of the X side (theorem 2)");
  ck->add_option("--tol", tol, "strict-inequality tolerance (default 1e-9)");
  ck->add_flag("--json", as_json, "emit JSON");

  auto* vf = app.add_subcommand("verify", "run a verification campaign from a config file");
  vf->add_option("--config", config_file, "JSON or key=value config")->required();
  vf->add_option("--workers", workers, "parallel workers (default: SPECMATCH_WORKERS or all cores)");
  auto* tol_opt = vf->add_option("--tol", tol, "sharpness gap tolerance (default 1e-6)");
  vf->add_option("--csv", csv_file, "also write per-graph reports as CSV");

  auto* ex = app.add_subcommand("extremal", "emit an extremal family member as graph6");
  ex->add_option("--family", family, "g4 | g5 | gamma")
      ->required()
      ->check(CLI::IsMember({"g4", "g5", "gamma"}));
  ex->add_option("--n", n, "order (g4, g5) or side size (gamma)")->required();
  ex->add_option("--s", s, "subset size (gamma)");
  ex->add_option("--k", k, "neighbourhood size (gamma; default s-1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sp->parsed()) return cmd_spectrum(file, format, as_json, with_matrix);
    if (th->parsed()) return cmd_threshold(theorem, n, as_json);
    if (ck->parsed()) return cmd_check(file, format, theorem, bipartition, tol, as_json);
    if (vf->parsed()) return cmd_verify(config_file, workers, tol, tol_opt->count() > 0, csv_file);
    if (ex->parsed()) return cmd_extremal(family, n, s, k);
  } catch (const DisconnectedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (byte offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
