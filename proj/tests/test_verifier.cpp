#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "specmatch/graph.hpp"
#include "specmatch/matching.hpp"
#include "specmatch/spectral.hpp"
#include "specmatch/thresholds.hpp"
#include "specmatch/verifier.hpp"
#include "test_helpers.hpp"

using namespace specmatch;
using specmatch::testing::cycle_graph;

TEST_CASE("labeled connected enumeration") {
  const long expected[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    long count = 0;
    enumerate_connected(n, [&](const Graph&) { ++count; });
    CHECK(count == expected[n]);
  }
  CHECK_THROWS_AS(enumerate_connected(8, [](const Graph&) {}), std::invalid_argument);

  // deterministic order: the first connected graph on 3 vertices is the
  // path through vertex 0 (edge mask {01, 02})
  Graph first(1);
  bool got = false;
  enumerate_connected(3, [&](const Graph& g) {
    if (!got) {
      first = g;
      got = true;
    }
  });
  CHECK(first.edge_count() == 2);
  CHECK(first.has_edge(0, 1));
  CHECK(first.has_edge(0, 2));
}

TEST_CASE("balanced bipartite enumeration") {
  long count = 0;
  enumerate_connected_balanced_bipartite(3, [&](const Graph& g, const Bipartition& b) {
    CHECK(is_valid_bipartition(g, b));
    ++count;
  });
  CHECK(count == 205);
  CHECK_THROWS_AS(enumerate_connected_balanced_bipartite(5, [](const Graph&, const Bipartition&) {}),
                  std::invalid_argument);
}

TEST_CASE("seeded random graphs") {
  CHECK(random_connected(6, 1.0, 9) == complete(6));
  CHECK(random_connected(8, 0.5, 42) == random_connected(8, 0.5, 42));
  CHECK_FALSE(random_connected(8, 0.5, 42) == random_connected(8, 0.5, 43));
  CHECK_THROWS_AS(random_connected(8, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_connected(12, 1e-9, 1), std::runtime_error);  // attempt cap

  const auto [g, sides] = random_balanced_bipartite(4, 1.0, 5);
  CHECK(g == join(empty_graph(4), empty_graph(4)));
  CHECK(is_valid_bipartition(g, sides));
}

TEST_CASE("condition 1 classification") {
  const auto c4 = check_theorem1(cycle_graph(4));
  CHECK(c4.verdict == Verdict::consistent);
  CHECK(c4.eta1 == doctest::Approx(8.0));
  CHECK(c4.below_threshold);
  CHECK(c4.has_pm);

  // the extremal graph sits exactly at the threshold: no claim is made
  const auto g4 = check_theorem1(build_g4(4));
  CHECK(g4.verdict == Verdict::above_threshold);
  CHECK_FALSE(g4.below_threshold);
  CHECK_FALSE(g4.has_pm);

  CHECK(check_theorem1(complete(6)).verdict == Verdict::consistent);
  CHECK_THROWS_AS(check_theorem1(complete(5)), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem1(disjoint_union(complete(2), complete(2))), DisconnectedError);
}

TEST_CASE("condition 2 classification") {
  const Graph k33 = join(empty_graph(3), empty_graph(3));
  const auto r = check_theorem2(k33, Bipartition{{0, 1, 2}, {3, 4, 5}});
  CHECK(r.verdict == Verdict::consistent);
  CHECK(r.eta1 == doctest::Approx(14.0));
  CHECK(r.has_pm);

  // The gamma family lands strictly below the quartic threshold while having
  // no perfect matching, so the honest verdict is "counterexample".
  const auto [g, sides] = build_gamma(3, 2, 1);
  const auto rg = check_theorem2(g, sides);
  CHECK(rg.verdict == Verdict::counterexample);
  CHECK(rg.eta1 == doctest::Approx((27.0 + std::sqrt(193.0)) / 2.0).epsilon(1e-10));
  CHECK(rg.threshold == doctest::Approx(21.508041342).epsilon(1e-9));

  CHECK_THROWS_AS(check_theorem2(join(empty_graph(2), empty_graph(3)),
                                 Bipartition{{0, 1}, {2, 3, 4}}),
                  std::invalid_argument);
}

TEST_CASE("sharpness pairs, condition 1") {
  for (int n : {4, 6, 8, 10, 12, 16, 20}) {
    const auto [eta, thr] = sharpness_theorem1(n);
    CHECK(std::abs(eta - thr) <= 1e-6);
  }
  CHECK_THROWS_AS(sharpness_theorem1(5), std::invalid_argument);
}

TEST_CASE("sharpness pairs, condition 2 document the quartic gap") {
  // eta1(gamma(n-1,n-2)) and kappa(n) do not coincide; the gap hovers
  // around one for every side size.
  const auto [eta3, thr3] = sharpness_theorem2(3);
  CHECK(eta3 == doctest::Approx((27.0 + std::sqrt(193.0)) / 2.0).epsilon(1e-10));
  CHECK(thr3 == doctest::Approx(21.508041342).epsilon(1e-9));
  for (int n = 3; n <= 12; ++n) {
    const auto [eta, thr] = sharpness_theorem2(n);
    CHECK(eta < thr);
    CHECK(thr - eta > 1.0);
    CHECK(thr - eta < 1.5);
  }
}

TEST_CASE("radius orderings between the families") {
  for (const auto& result : ordering_suite()) {
    CAPTURE(result.claim);
    CHECK(result.instances > 0);
    CHECK(result.violations == 0);
  }
}

TEST_CASE("campaign on a tiny exhaustive sweep") {
  CampaignConfig cfg;
  cfg.theorem1_exhaustive = {4};
  const auto summary = run_campaign(cfg);
  CHECK(summary.graphs_checked == 38);
  CHECK(summary.counterexamples.empty());
  CHECK(summary.clean(cfg.tolerance));
}

TEST_CASE("campaign surfaces the side-3 counterexamples") {
  CampaignConfig cfg;
  cfg.theorem2_exhaustive = {3};
  const auto summary = run_campaign(cfg);
  CHECK(summary.graphs_checked == 205);
  CHECK(summary.counterexamples.size() == 9);  // the labeled gamma(2,1) copies
  for (const auto& r : summary.counterexamples) {
    CHECK(r.eta1 == doctest::Approx((27.0 + std::sqrt(193.0)) / 2.0).epsilon(1e-9));
    CHECK_FALSE(r.has_pm);
  }
  CHECK_FALSE(summary.clean(cfg.tolerance));
}

TEST_CASE("campaign validation") {
  CHECK_THROWS_AS(run_campaign(CampaignConfig{}), std::invalid_argument);

  CampaignConfig over_cap;
  over_cap.theorem1_exhaustive = {8};
  CHECK_THROWS_AS(run_campaign(over_cap), std::invalid_argument);

  CampaignConfig odd_order;
  odd_order.theorem1_exhaustive = {5};
  CHECK_THROWS_AS(run_campaign(odd_order), std::invalid_argument);

  CampaignConfig bad_random;
  bad_random.theorem1_random.count = 10;
  CHECK_THROWS_AS(run_campaign(bad_random), std::invalid_argument);  // no sizes
}

TEST_CASE("campaign output is deterministic") {
  CampaignConfig cfg;
  cfg.theorem1_exhaustive = {4};
  cfg.theorem1_random = {50, {4, 6, 8}, 0.5, 42};
  cfg.theorem2_random = {50, {3, 4}, 0.5, 43};
  cfg.sharpness1 = {4, 6};
  cfg.sharpness2 = {3};
  cfg.orderings = false;
  cfg.workers = 1;

  const std::string once = summary_to_json(run_campaign(cfg));
  const std::string twice = summary_to_json(run_campaign(cfg));
  CHECK(once == twice);

  // worker count must not change the findings
  CampaignConfig threaded = cfg;
  threaded.workers = 3;
  const auto a = run_campaign(cfg);
  const auto b = run_campaign(threaded);
  REQUIRE(a.counterexamples.size() == b.counterexamples.size());
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i)
    CHECK(a.counterexamples[i].graph_id == b.counterexamples[i].graph_id);
  CHECK(a.graphs_checked == b.graphs_checked);
}

TEST_CASE("config parsing") {
  const auto json_cfg = parse_campaign_config(R"({
    "theorem1": {"exhaustive_n": [4, 6],
                  "random": {"count": 100, "sizes": [8, 10], "edge_prob": 0.4, "seed": 7}},
    "theorem2": {"exhaustive_side": [3]},
    "sharpness1_n": [4, 6],
    "orderings": true,
    "tolerance": 1e-7,
    "workers": 2
  })");
  CHECK(json_cfg.theorem1_exhaustive == std::vector<int>{4, 6});
  CHECK(json_cfg.theorem1_random.count == 100);
  CHECK(json_cfg.theorem1_random.sizes == std::vector<int>{8, 10});
  CHECK(json_cfg.theorem1_random.edge_prob == doctest::Approx(0.4));
  CHECK(json_cfg.theorem1_random.seed == 7);
  CHECK(json_cfg.theorem2_exhaustive == std::vector<int>{3});
  CHECK(json_cfg.orderings);
  CHECK(json_cfg.tolerance == doctest::Approx(1e-7));
  CHECK(json_cfg.workers == 2);

  const auto kv_cfg = parse_campaign_config(
      "t1_exhaustive=4,6\n"
      "t1_random_count=10\n"
      "t1_random_sizes=8\n"
      "orderings=true\n"
      "tolerance=1e-5\n");
  CHECK(kv_cfg.theorem1_exhaustive == std::vector<int>{4, 6});
  CHECK(kv_cfg.theorem1_random.count == 10);
  CHECK(kv_cfg.orderings);

  CHECK_THROWS_AS(parse_campaign_config(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_campaign_config("{ not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_campaign_config("bogus_key=1\n"), std::invalid_argument);
}

TEST_CASE("csv export") {
  CampaignConfig cfg;
  cfg.theorem1_exhaustive = {4};
  cfg.collect_reports = true;
  const auto summary = run_campaign(cfg);
  CHECK(summary.all_reports.size() == 38);
  const std::string csv = reports_to_csv(summary.all_reports);
  CHECK(csv.rfind("graph_id,eta1,threshold,below_threshold,has_pm,verdict\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 39);
}

TEST_CASE("center-join reading of g3 at its smallest order has no matching") {
  // K_s joined to (K_1 u complement(K_{s+1})): removing the K_s side leaves
  // s+2 odd components, so no perfect matching exists.
  for (int s = 2; s <= 4; ++s) {
    const Graph g = build_g3(2 * s + 2, s);
    CHECK_FALSE(has_perfect_matching(g));
  }
}

TEST_CASE("all-ones quotient of the bipartite extremal family") {
  // measured value is 6n + 4 - 8/n, comfortably above 6n
  for (int n = 3; n <= 6; ++n) {
    const auto q = dsl_matrix(build_gamma(n, n - 1, n - 2).graph);
    double total = 0.0;
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) total += q(i, j);
    const double measured = total / (2.0 * n);
    CHECK(measured == doctest::Approx(6.0 * n + 4.0 - 8.0 / n).epsilon(1e-12));
    CHECK(measured > 6.0 * n);
  }
}
