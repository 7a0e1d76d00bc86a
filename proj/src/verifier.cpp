#include "specmatch/verifier.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "specmatch/matching.hpp"
#include "specmatch/spectral.hpp"
#include "specmatch/thresholds.hpp"

namespace specmatch {

using nlohmann::json;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::counterexample: return "counterexample";
    case Verdict::above_threshold: return "above-threshold";
  }
  return "unknown";
}

bool CampaignSummary::clean(double tolerance) const {
  if (!counterexamples.empty()) return false;
  for (const auto& s : sharpness)
    if (s.gap > tolerance) return false;
  for (const auto& o : orderings)
    if (o.violations != 0) return false;
  return true;
}

namespace {

// xorshift64*: s ^= s >> 12; s ^= s << 25; s ^= s >> 27; out = s * 2685821657736338717.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed != 0 ? seed : 0x2545F4914F6CDD1DULL) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Order-preserving parallel map over an index range; chunking is contiguous
// so the result is independent of the worker count.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  workers = std::min<std::size_t>(std::max(workers, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::size_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = static_cast<std::size_t>(w) * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn]() {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void enumerate_connected(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("labeled enumeration supported for 1 <= n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint32_t mask_count = 1u << pairs.size();
  const std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1u);
  for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
    std::uint8_t adj[7] = {};
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (mask >> p & 1u) {
        adj[pairs[p].first] |= static_cast<std::uint8_t>(1u << pairs[p].second);
        adj[pairs[p].second] |= static_cast<std::uint8_t>(1u << pairs[p].first);
      }
    std::uint8_t comp = 1;
    for (;;) {
      std::uint8_t frontier = 0;
      std::uint8_t scan = comp;
      while (scan != 0) {
        const int v = std::countr_zero(scan);
        scan &= static_cast<std::uint8_t>(scan - 1);
        frontier |= adj[v];
      }
      const std::uint8_t grown = static_cast<std::uint8_t>(comp | frontier);
      if (grown == comp) break;
      comp = grown;
    }
    if (comp != full) continue;
    Graph g(n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (mask >> p & 1u) g.add_edge(pairs[p].first, pairs[p].second);
    fn(g);
  }
}

void enumerate_connected_balanced_bipartite(
    int side, const std::function<void(const Graph&, const Bipartition&)>& fn) {
  if (side < 1 || side > 4)
    throw std::invalid_argument("bipartite enumeration supported for side size 1..4");
  Bipartition b;
  for (int i = 0; i < side; ++i) b.left.push_back(i);
  for (int i = 0; i < side; ++i) b.right.push_back(side + i);

  const int pair_count = side * side;
  const std::uint32_t mask_count = 1u << pair_count;
  const std::uint16_t full = static_cast<std::uint16_t>((1u << (2 * side)) - 1u);
  for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
    std::uint16_t adj[8] = {};
    for (int p = 0; p < pair_count; ++p)
      if (mask >> p & 1u) {
        const int i = p / side, j = side + p % side;
        adj[i] |= static_cast<std::uint16_t>(1u << j);
        adj[j] |= static_cast<std::uint16_t>(1u << i);
      }
    std::uint16_t comp = 1;
    for (;;) {
      std::uint16_t frontier = 0;
      std::uint16_t scan = comp;
      while (scan != 0) {
        const int v = std::countr_zero(scan);
        scan &= static_cast<std::uint16_t>(scan - 1);
        frontier |= adj[v];
      }
      const std::uint16_t grown = static_cast<std::uint16_t>(comp | frontier);
      if (grown == comp) break;
      comp = grown;
    }
    if (comp != full) continue;
    Graph g(2 * side);
    for (int p = 0; p < pair_count; ++p)
      if (mask >> p & 1u) g.add_edge(p / side, side + p % side);
    fn(g, b);
  }
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in (0, 1]");
  Xorshift64Star rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_unit() < p) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected exceeded the attempt cap (p too small?)");
}

BipartiteGraph random_balanced_bipartite(int side, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in (0, 1]");
  Xorshift64Star rng(seed);
  Bipartition b;
  for (int i = 0; i < side; ++i) b.left.push_back(i);
  for (int i = 0; i < side; ++i) b.right.push_back(side + i);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g(2 * side);
    for (int u = 0; u < side; ++u)
      for (int v = side; v < 2 * side; ++v)
        if (rng.next_unit() < p) g.add_edge(u, v);
    if (is_connected(g)) return {std::move(g), b};
  }
  throw std::runtime_error("random_balanced_bipartite exceeded the attempt cap (p too small?)");
}

namespace {

CheckReport classify(const Graph& g, double eta, double threshold, bool pm, double strict_tol) {
  CheckReport r;
  r.graph_id = to_graph6(g);
  r.eta1 = eta;
  r.threshold = threshold;
  r.below_threshold = eta < threshold - strict_tol;
  r.has_pm = pm;
  r.verdict = !r.below_threshold
                  ? Verdict::above_threshold
                  : (pm ? Verdict::consistent : Verdict::counterexample);
  return r;
}

}  // namespace

CheckReport check_theorem1(const Graph& g, double strict_tol) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("condition 1 applies to even order n >= 4");
  if (!is_connected(g)) throw DisconnectedError("condition 1 requires a connected graph");
  return classify(g, dsl_radius(g), theorem1_threshold(n), has_perfect_matching(g), strict_tol);
}

CheckReport check_theorem2(const Graph& g, const Bipartition& b, double strict_tol) {
  if (!is_valid_bipartition(g, b))
    throw std::invalid_argument("condition 2 requires a valid bipartition");
  if (b.left.size() != b.right.size())
    throw std::invalid_argument("condition 2 applies to balanced bipartite graphs");
  const int side = static_cast<int>(b.left.size());
  if (side < 3) throw std::invalid_argument("condition 2 applies to side size n >= 3");
  if (!is_connected(g)) throw DisconnectedError("condition 2 requires a connected graph");
  const bool pm = max_matching_bipartite(g, b).is_perfect;
  return classify(g, dsl_radius(g), kappa(side), pm, strict_tol);
}

std::pair<double, double> sharpness_theorem1(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("sharpness_theorem1 requires an even order n >= 4");
  if (n == 4 || n >= 12) return {dsl_radius(build_g4(n)), theta(n)};
  return {dsl_radius(build_g5(n / 2 - 1)), split_threshold(n)};
}

std::pair<double, double> sharpness_theorem2(int n) {
  if (n < 3) throw std::invalid_argument("sharpness_theorem2 requires side size n >= 3");
  return {dsl_radius(build_gamma(n, n - 1, n - 2).graph), kappa(n)};
}

namespace {

constexpr double kStrictMargin = 1e-9;

void record(OrderingResult& result, double smaller, double larger) {
  ++result.instances;
  if (!(larger - smaller > kStrictMargin)) ++result.violations;
}

// Partitions of total into exactly `parts` parts, descending.
void descending_partitions(int total, int parts, int max_part,
                           std::vector<int>& current,
                           const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 1) {
    if (total >= 1 && total <= max_part) {
      current.push_back(total);
      fn(current);
      current.pop_back();
    }
    return;
  }
  for (int first = std::min(total - parts + 1, max_part); first >= 1; --first) {
    current.push_back(first);
    descending_partitions(total - first, parts - 1, first, current, fn);
    current.pop_back();
  }
}

}  // namespace

std::vector<OrderingResult> ordering_suite(const OrderingRanges& ranges) {
  std::vector<OrderingResult> out;

  {
    OrderingResult r{"eta1(g2) < eta1(split_family)", 0, 0};
    for (int n : ranges.g2_orders)
      for (int s = 1; s <= 2; ++s)
        for (int q = 3; q <= 4; ++q) {
          if (n - s - q + 1 < 3) continue;
          const double base = dsl_radius(build_g2(n, s, q));
          std::vector<int> g2_shape{n - s - q + 1};
          g2_shape.insert(g2_shape.end(), static_cast<std::size_t>(q) - 1, 1);
          std::vector<int> current;
          descending_partitions(n - s, q, n - s, current, [&](const std::vector<int>& parts) {
            if (parts == g2_shape) return;
            record(r, base, dsl_radius(build_split_family(s, parts)));
          });
        }
    out.push_back(std::move(r));
  }

  {
    OrderingResult r{"eta1(g3) < eta1(g2), q >= s+4", 0, 0};
    for (int n : ranges.g3_orders)
      for (int s = 1; s <= 3; ++s) {
        if (n - 2 * s - 1 < 1) continue;
        const double base = dsl_radius(build_g3(n, s));
        for (int q = s + 4; n - s - q + 1 >= 1; q += 2)
          record(r, base, dsl_radius(build_g2(n, s, q)));
      }
    out.push_back(std::move(r));
  }

  {
    OrderingResult r{"eta1(gamma(s,s-1)) < eta1(gamma(s,k)), k <= s-2", 0, 0};
    for (int n : ranges.gamma_sides)
      for (int s = 3; s <= n - 1; ++s) {
        const double base = dsl_radius(build_gamma(n, s, s - 1).graph);
        for (int k = 1; k <= s - 2; ++k)
          record(r, base, dsl_radius(build_gamma(n, s, k).graph));
      }
    out.push_back(std::move(r));
  }

  {
    // Strict only for s >= 3: gamma(n-1,n-2) and gamma(2,1) are the same
    // graph with the sides exchanged, so their radii coincide at s = 2.
    OrderingResult r{"eta1(gamma(n-1,n-2)) < eta1(gamma(s,s-1)), 3 <= s <= n-2", 0, 0};
    for (int n : ranges.gamma_min_sides) {
      const double base = dsl_radius(build_gamma(n, n - 1, n - 2).graph);
      for (int s = 3; s <= n - 2; ++s)
        record(r, base, dsl_radius(build_gamma(n, s, s - 1).graph));
    }
    out.push_back(std::move(r));
  }

  {
    OrderingResult r{"eta1(g4) < eta1(g3), s >= 2, n >= 2s+4", 0, 0};
    for (int n : ranges.g4_orders) {
      const double base = dsl_radius(build_g4(n));
      for (int s = 2; 2 * s + 4 <= n; ++s)
        record(r, base, dsl_radius(build_g3(n, s)));
    }
    out.push_back(std::move(r));
  }

  return out;
}

namespace {

void validate_config(const CampaignConfig& cfg) {
  const bool has_work = !cfg.theorem1_exhaustive.empty() || cfg.theorem1_random.count > 0 ||
                        !cfg.theorem2_exhaustive.empty() || cfg.theorem2_random.count > 0 ||
                        !cfg.sharpness1.empty() || !cfg.sharpness2.empty() || cfg.orderings;
  if (!has_work) throw std::invalid_argument("campaign config specifies no work");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  for (int n : cfg.theorem1_exhaustive) {
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("exhaustive sweep orders must be even and >= 4");
    if (n > 7)
      throw std::invalid_argument("labeled enumeration capped at order 7; order " +
                                  std::to_string(n) + " rejected");
  }
  for (int side : cfg.theorem2_exhaustive) {
    if (side < 3) throw std::invalid_argument("bipartite sweep side size must be >= 3");
    if (side > 4)
      throw std::invalid_argument("bipartite enumeration capped at side 4; side " +
                                  std::to_string(side) + " rejected");
  }
  auto check_random = [](const RandomSweep& sweep, bool bipartite) {
    if (sweep.count < 0) throw std::invalid_argument("random sweep count must be >= 0");
    if (sweep.count == 0) return;
    if (sweep.sizes.empty())
      throw std::invalid_argument("random sweep needs at least one size");
    if (!(sweep.edge_prob > 0.0 && sweep.edge_prob <= 1.0))
      throw std::invalid_argument("edge probability must be in (0, 1]");
    for (int v : sweep.sizes) {
      if (bipartite && v < 3)
        throw std::invalid_argument("random bipartite sweep needs side sizes >= 3");
      if (!bipartite && (v < 4 || v % 2 != 0))
        throw std::invalid_argument("random sweep needs even orders >= 4");
    }
  };
  check_random(cfg.theorem1_random, false);
  check_random(cfg.theorem2_random, true);
  for (int n : cfg.sharpness1)
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("sharpness1 entries must be even orders >= 4");
  for (int n : cfg.sharpness2)
    if (n < 3) throw std::invalid_argument("sharpness2 entries must be side sizes >= 3");
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  validate_config(cfg);
  const int workers = resolve_workers(cfg.workers);

  CampaignSummary summary;
  summary.config = cfg;

  auto absorb = [&](std::vector<CheckReport>&& reports) {
    summary.graphs_checked += static_cast<long>(reports.size());
    for (auto& r : reports) {
      if (r.verdict == Verdict::counterexample) summary.counterexamples.push_back(r);
      if (cfg.collect_reports) summary.all_reports.push_back(std::move(r));
    }
  };

  for (int n : cfg.theorem1_exhaustive) {
    std::vector<Graph> graphs;
    enumerate_connected(n, [&](const Graph& g) { graphs.push_back(g); });
    std::vector<CheckReport> reports(graphs.size());
    parallel_for(graphs.size(), workers,
                 [&](std::size_t i) { reports[i] = check_theorem1(graphs[i]); });
    absorb(std::move(reports));
  }

  if (cfg.theorem1_random.count > 0) {
    const auto& sweep = cfg.theorem1_random;
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(sweep.count));
    for (int i = 0; i < sweep.count; ++i) {
      const int n = sweep.sizes[static_cast<std::size_t>(i) % sweep.sizes.size()];
      graphs.push_back(random_connected(n, sweep.edge_prob, sweep.seed + static_cast<std::uint64_t>(i)));
    }
    std::vector<CheckReport> reports(graphs.size());
    parallel_for(graphs.size(), workers,
                 [&](std::size_t i) { reports[i] = check_theorem1(graphs[i]); });
    absorb(std::move(reports));
  }

  for (int side : cfg.theorem2_exhaustive) {
    std::vector<BipartiteGraph> graphs;
    enumerate_connected_balanced_bipartite(side, [&](const Graph& g, const Bipartition& b) {
      graphs.push_back({g, b});
    });
    std::vector<CheckReport> reports(graphs.size());
    parallel_for(graphs.size(), workers, [&](std::size_t i) {
      reports[i] = check_theorem2(graphs[i].graph, graphs[i].sides);
    });
    absorb(std::move(reports));
  }

  if (cfg.theorem2_random.count > 0) {
    const auto& sweep = cfg.theorem2_random;
    std::vector<BipartiteGraph> graphs;
    graphs.reserve(static_cast<std::size_t>(sweep.count));
    for (int i = 0; i < sweep.count; ++i) {
      const int side = sweep.sizes[static_cast<std::size_t>(i) % sweep.sizes.size()];
      graphs.push_back(
          random_balanced_bipartite(side, sweep.edge_prob, sweep.seed + static_cast<std::uint64_t>(i)));
    }
    std::vector<CheckReport> reports(graphs.size());
    parallel_for(graphs.size(), workers, [&](std::size_t i) {
      reports[i] = check_theorem2(graphs[i].graph, graphs[i].sides);
    });
    absorb(std::move(reports));
  }

  for (int n : cfg.sharpness1) {
    const auto [eta, thr] = sharpness_theorem1(n);
    summary.sharpness.push_back({1, n, eta, thr, std::abs(eta - thr)});
  }
  for (int n : cfg.sharpness2) {
    const auto [eta, thr] = sharpness_theorem2(n);
    summary.sharpness.push_back({2, n, eta, thr, std::abs(eta - thr)});
  }

  if (cfg.orderings) summary.orderings = ordering_suite();

  std::sort(summary.counterexamples.begin(), summary.counterexamples.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.graph_id < b.graph_id; });
  return summary;
}

namespace {

std::vector<int> parse_int_list(const json& j, const char* what) {
  std::vector<int> out;
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

RandomSweep parse_random(const json& j) {
  RandomSweep sweep;
  sweep.count = j.value("count", 0);
  if (j.contains("sizes")) sweep.sizes = parse_int_list(j.at("sizes"), "sizes");
  sweep.edge_prob = j.value("edge_prob", 0.5);
  sweep.seed = j.value("seed", std::uint64_t{1});
  return sweep;
}

std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

CampaignConfig parse_key_value_config(std::string_view text) {
  CampaignConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "t1_exhaustive") cfg.theorem1_exhaustive = parse_int_csv(value);
    else if (key == "t1_random_count") cfg.theorem1_random.count = std::stoi(value);
    else if (key == "t1_random_sizes") cfg.theorem1_random.sizes = parse_int_csv(value);
    else if (key == "t1_random_p") cfg.theorem1_random.edge_prob = std::stod(value);
    else if (key == "t1_random_seed") cfg.theorem1_random.seed = std::stoull(value);
    else if (key == "t2_exhaustive") cfg.theorem2_exhaustive = parse_int_csv(value);
    else if (key == "t2_random_count") cfg.theorem2_random.count = std::stoi(value);
    else if (key == "t2_random_sizes") cfg.theorem2_random.sizes = parse_int_csv(value);
    else if (key == "t2_random_p") cfg.theorem2_random.edge_prob = std::stod(value);
    else if (key == "t2_random_seed") cfg.theorem2_random.seed = std::stoull(value);
    else if (key == "sharpness1") cfg.sharpness1 = parse_int_csv(value);
    else if (key == "sharpness2") cfg.sharpness2 = parse_int_csv(value);
    else if (key == "orderings") cfg.orderings = (value == "true" || value == "1");
    else if (key == "tolerance") cfg.tolerance = std::stod(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  return cfg;
}

}  // namespace

CampaignConfig parse_campaign_config(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw std::invalid_argument("empty campaign config");
  if (text[first] != '{') return parse_key_value_config(text);

  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config JSON parse error: ") + e.what());
  }
  CampaignConfig cfg;
  if (j.contains("theorem1")) {
    const auto& t = j.at("theorem1");
    if (t.contains("exhaustive_n"))
      cfg.theorem1_exhaustive = parse_int_list(t.at("exhaustive_n"), "exhaustive_n");
    if (t.contains("random")) cfg.theorem1_random = parse_random(t.at("random"));
  }
  if (j.contains("theorem2")) {
    const auto& t = j.at("theorem2");
    if (t.contains("exhaustive_side"))
      cfg.theorem2_exhaustive = parse_int_list(t.at("exhaustive_side"), "exhaustive_side");
    if (t.contains("random")) cfg.theorem2_random = parse_random(t.at("random"));
  }
  if (j.contains("sharpness1_n")) cfg.sharpness1 = parse_int_list(j.at("sharpness1_n"), "sharpness1_n");
  if (j.contains("sharpness2_n")) cfg.sharpness2 = parse_int_list(j.at("sharpness2_n"), "sharpness2_n");
  cfg.orderings = j.value("orderings", false);
  cfg.tolerance = j.value("tolerance", 1e-6);
  cfg.workers = j.value("workers", 0);
  return cfg;
}

namespace {

json report_to_json(const CheckReport& r) {
  return json{{"graph_id", r.graph_id},
              {"eta1", r.eta1},
              {"threshold", r.threshold},
              {"below_threshold", r.below_threshold},
              {"has_pm", r.has_pm},
              {"verdict", std::string(verdict_name(r.verdict))}};
}

json config_to_json(const CampaignConfig& cfg) {
  auto sweep = [](const RandomSweep& s) {
    return json{{"count", s.count}, {"sizes", s.sizes}, {"edge_prob", s.edge_prob}, {"seed", s.seed}};
  };
  return json{{"theorem1",
               {{"exhaustive_n", cfg.theorem1_exhaustive}, {"random", sweep(cfg.theorem1_random)}}},
              {"theorem2",
               {{"exhaustive_side", cfg.theorem2_exhaustive}, {"random", sweep(cfg.theorem2_random)}}},
              {"sharpness1_n", cfg.sharpness1},
              {"sharpness2_n", cfg.sharpness2},
              {"orderings", cfg.orderings},
              {"tolerance", cfg.tolerance},
              {"workers", cfg.workers}};
}

}  // namespace

std::string summary_to_json(const CampaignSummary& summary) {
  json j;
  j["config"] = config_to_json(summary.config);
  j["graphs_checked"] = summary.graphs_checked;
  j["counterexamples"] = json::array();
  for (const auto& r : summary.counterexamples) j["counterexamples"].push_back(report_to_json(r));
  j["sharpness"] = json::array();
  for (const auto& s : summary.sharpness)
    j["sharpness"].push_back(json{{"theorem", s.theorem},
                                  {"n", s.n},
                                  {"eta1", s.eta1},
                                  {"threshold", s.threshold},
                                  {"gap", s.gap}});
  j["orderings"] = json::array();
  for (const auto& o : summary.orderings)
    j["orderings"].push_back(
        json{{"claim", o.claim}, {"instances", o.instances}, {"violations", o.violations}});
  return j.dump(2);
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "graph_id,eta1,threshold,below_threshold,has_pm,verdict\n";
  char buffer[128];
  for (const auto& r : reports) {
    std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g", r.eta1, r.threshold);
    out += r.graph_id;
    out += ',';
    out += buffer;
    out += r.below_threshold ? ",true" : ",false";
    out += r.has_pm ? ",true" : ",false";
    out += ',';
    out += verdict_name(r.verdict);
    out += '\n';
  }
  return out;
}

}  // namespace specmatch
