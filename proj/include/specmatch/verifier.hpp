#ifndef SPECMATCH_VERIFIER_HPP
#define SPECMATCH_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specmatch/graph.hpp"

namespace specmatch {

enum class Verdict { consistent, counterexample, above_threshold };

std::string_view verdict_name(Verdict v);

/// Per-graph classification against one of the two sufficient conditions.
struct CheckReport {
  std::string graph_id;  // graph6
  double eta1 = 0.0;
  double threshold = 0.0;
  bool below_threshold = false;
  bool has_pm = false;
  Verdict verdict = Verdict::consistent;
};

struct SharpnessEntry {
  int theorem = 0;
  int n = 0;  // graph order (theorem 1) or side size (theorem 2)
  double eta1 = 0.0;
  double threshold = 0.0;
  double gap = 0.0;
};

struct OrderingResult {
  std::string claim;
  int instances = 0;
  int violations = 0;
};

struct RandomSweep {
  int count = 0;
  std::vector<int> sizes;  // graph orders (theorem 1) or side sizes (theorem 2)
  double edge_prob = 0.5;
  std::uint64_t seed = 1;
};

struct CampaignConfig {
  std::vector<int> theorem1_exhaustive;  // even orders, enumeration-capped
  RandomSweep theorem1_random;
  std::vector<int> theorem2_exhaustive;  // side sizes, enumeration-capped
  RandomSweep theorem2_random;
  std::vector<int> sharpness1;  // even orders
  std::vector<int> sharpness2;  // side sizes
  bool orderings = false;
  double tolerance = 1e-6;
  int workers = 0;  // 0 = hardware concurrency
  bool collect_reports = false;
};

struct CampaignSummary {
  CampaignConfig config;
  long graphs_checked = 0;
  std::vector<CheckReport> counterexamples;  // sorted by graph_id
  std::vector<SharpnessEntry> sharpness;
  std::vector<OrderingResult> orderings;
  std::vector<CheckReport> all_reports;  // only when collect_reports

  bool clean(double tolerance) const;
};

/// Every labeled connected graph on n vertices (n <= 7), ascending edge-mask
/// order over pairs (0,1),(0,2),...,(n-2,n-1).
void enumerate_connected(int n, const std::function<void(const Graph&)>& fn);

/// Every labeled connected balanced bipartite graph with the fixed sides
/// X = 0..side-1, Y = side..2*side-1 (side <= 4).
void enumerate_connected_balanced_bipartite(
    int side, const std::function<void(const Graph&, const Bipartition&)>& fn);

/// Erdos-Renyi draw, redrawn until connected (attempt cap 10^5). One
/// xorshift64* stream per call, one draw per vertex pair in ascending
/// (u, v) order; fully determined by the seed.
Graph random_connected(int n, double p, std::uint64_t seed);
BipartiteGraph random_balanced_bipartite(int side, double p, std::uint64_t seed);

CheckReport check_theorem1(const Graph& g, double strict_tol = 1e-9);
CheckReport check_theorem2(const Graph& g, const Bipartition& b, double strict_tol = 1e-9);

/// (eta1 of the extremal graph, threshold) for the stated size.
std::pair<double, double> sharpness_theorem1(int n);
std::pair<double, double> sharpness_theorem2(int n);

struct OrderingRanges {
  std::vector<int> g2_orders{8, 10, 12};
  std::vector<int> g3_orders{10, 12, 14};
  std::vector<int> gamma_sides{4, 5, 6};
  std::vector<int> gamma_min_sides{5, 6, 7};
  std::vector<int> g4_orders{8, 10, 12, 14};
};

/// Strict spectral-radius orderings between the extremal families,
/// evaluated instance by instance; margin 1e-9.
std::vector<OrderingResult> ordering_suite(const OrderingRanges& ranges = {});

CampaignSummary run_campaign(const CampaignConfig& config);

/// Accepts a JSON object or flat key=value lines.
CampaignConfig parse_campaign_config(std::string_view text);

std::string summary_to_json(const CampaignSummary& summary);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

}  // namespace specmatch

#endif
