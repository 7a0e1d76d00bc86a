#include <doctest.h>

#include <set>

#include "specmatch/graph.hpp"
#include "specmatch/matching.hpp"
#include "specmatch/verifier.hpp"
#include "test_helpers.hpp"

using namespace specmatch;
using specmatch::testing::brute_force_matching_size;
using specmatch::testing::cycle_graph;
using specmatch::testing::petersen;

namespace {

Graph star4() { return join(complete(1), empty_graph(3)); }

void check_valid_matching(const Graph& g, const MatchingResult& m) {
  std::set<int> seen;
  for (auto [u, v] : m.matched_edges) {
    CHECK(u < v);
    CHECK(g.has_edge(u, v));
    CHECK(seen.insert(u).second);
    CHECK(seen.insert(v).second);
  }
  CHECK(m.is_perfect == (2 * static_cast<int>(m.matched_edges.size()) == g.order()));
}

}  // namespace

TEST_CASE("general maximum matching") {
  const auto k4 = max_matching_general(complete(4));
  CHECK(k4.is_perfect);
  CHECK(k4.matched_edges.size() == 2);
  check_valid_matching(complete(4), k4);

  const auto star = max_matching_general(star4());
  CHECK_FALSE(star.is_perfect);
  CHECK(star.matched_edges.size() == 1);

  const auto pet = max_matching_general(petersen());
  CHECK(pet.is_perfect);
  CHECK(pet.matched_edges.size() == 5);
  CHECK(brute_force_matching_size(petersen()) == 5);

  CHECK(max_matching_general(cycle_graph(6)).is_perfect);
}

TEST_CASE("blossom agrees with brute force") {
  // exhaustive over all labeled connected graphs up to 6 vertices
  for (int n = 2; n <= 6; ++n)
    enumerate_connected(n, [&](const Graph& g) {
      const auto m = max_matching_general(g);
      check_valid_matching(g, m);
      CHECK(static_cast<int>(m.matched_edges.size()) == brute_force_matching_size(g));
    });
  // plus denser random graphs where blossoms actually form
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_connected(9, 0.3 + 0.01 * static_cast<double>(seed % 5), seed);
    const auto m = max_matching_general(g);
    check_valid_matching(g, m);
    CHECK(static_cast<int>(m.matched_edges.size()) == brute_force_matching_size(g));
  }
}

TEST_CASE("perfect matching decision") {
  for (int n = 4; n <= 20; n += 2) CHECK_FALSE(has_perfect_matching(build_g4(n)));
  CHECK(has_perfect_matching(cycle_graph(6)));
  CHECK_FALSE(has_perfect_matching(complete(5)));  // odd order
  CHECK_FALSE(has_perfect_matching(cycle_graph(7)));
}

TEST_CASE("odd components") {
  CHECK(odd_components(build_g4(6), {0}) == 3);
  CHECK(odd_components(complete(6), {}) == 0);
  CHECK(odd_components(build_g5(2), {0, 1}) == 4);
  CHECK_THROWS_AS(odd_components(complete(3), {5}), std::invalid_argument);
}

TEST_CASE("tutte witnesses") {
  const auto star = tutte_violation(star4());
  REQUIRE(star.has_value());
  CHECK(star->kind == WitnessKind::tutte);
  CHECK(star->set_s == std::vector<int>{0});
  CHECK(star->deficiency == 2);

  CHECK_FALSE(tutte_violation(complete(6)).has_value());
  CHECK(tutte_violation(build_gamma(3, 2, 1).graph).has_value());
  CHECK_THROWS_AS(tutte_violation(complete(30), 24), std::invalid_argument);

  // smallest violator, lexicographic tie-break: for the double star the
  // whole scan order puts {0} before any larger set
  const auto g4w = tutte_violation(build_g4(8));
  REQUIRE(g4w.has_value());
  CHECK(g4w->set_s == std::vector<int>{0});
}

TEST_CASE("tutte scan agrees with the blossom verdict") {
  for (int nos : {4, 6})
    enumerate_connected(nos, [&](const Graph& g) {
      CHECK(has_perfect_matching(g) == !tutte_violation(g).has_value());
    });
}

TEST_CASE("bipartite maximum matching") {
  const Graph k33 = join(empty_graph(3), empty_graph(3));
  Bipartition sides{{0, 1, 2}, {3, 4, 5}};
  const auto m = max_matching_bipartite(k33, sides);
  CHECK(m.is_perfect);
  CHECK(m.matched_edges.size() == 3);

  const auto [gamma, gsides] = build_gamma(3, 2, 1);
  const auto gm = max_matching_bipartite(gamma, gsides);
  CHECK_FALSE(gm.is_perfect);
  CHECK(gm.matched_edges.size() == 2);

  const Graph k23 = join(empty_graph(2), empty_graph(3));
  CHECK(max_matching_bipartite(k23, Bipartition{{0, 1}, {2, 3, 4}}).matched_edges.size() == 2);

  // bipartition must match the edges
  CHECK_THROWS_AS(max_matching_bipartite(k33, Bipartition{{0, 3}, {1, 2, 4, 5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_matching_bipartite(k33, Bipartition{{0, 1, 2}, {3, 4}}),
                  std::invalid_argument);
}

TEST_CASE("bipartite and general matchers agree") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int side = 3 + static_cast<int>(seed % 4);
    const auto [g, sides] = random_balanced_bipartite(side, 0.45, seed);
    const auto hk = max_matching_bipartite(g, sides);
    check_valid_matching(g, hk);
    CHECK(hk.matched_edges.size() == max_matching_general(g).matched_edges.size());
  }
}

TEST_CASE("hall witnesses") {
  for (int n = 3; n <= 8; ++n) {
    const auto [g, sides] = build_gamma(n, n - 1, n - 2);
    const auto w = hall_violation(g, sides);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::hall);
    CHECK(static_cast<int>(w->set_s.size()) == n - 1);
    CHECK(w->deficiency == 1);
  }

  const Graph k33 = join(empty_graph(3), empty_graph(3));
  CHECK_FALSE(hall_violation(k33, Bipartition{{0, 1, 2}, {3, 4, 5}}).has_value());

  const auto [g41, sides41] = build_gamma(4, 3, 1);
  const auto w41 = hall_violation(g41, sides41);
  REQUIRE(w41.has_value());
  CHECK(w41->set_s.size() == 2);  // any two S vertices see a single neighbour
  CHECK(w41->set_s == std::vector<int>{0, 1});
}

TEST_CASE("hall scan agrees with X-saturation") {
  enumerate_connected_balanced_bipartite(3, [&](const Graph& g, const Bipartition& b) {
    const bool saturates =
        static_cast<int>(max_matching_bipartite(g, b).matched_edges.size()) ==
        static_cast<int>(b.left.size());
    CHECK(saturates == !hall_violation(g, b).has_value());
  });
}
