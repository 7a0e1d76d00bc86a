#ifndef SPECMATCH_TEST_HELPERS_HPP
#define SPECMATCH_TEST_HELPERS_HPP

#include <vector>

#include "specmatch/graph.hpp"

namespace specmatch::testing {

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);            // spokes
  }
  return g;
}

// Independent maximum-matching size by exhaustive recursion (small n only).
inline int brute_force_matching_size(const Graph& g) {
  const int n = g.order();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  int best = 0;

  auto rec = [&](auto&& self, int v, int size) -> void {
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    if (v >= n) {
      if (size > best) best = size;
      return;
    }
    // v stays unmatched
    used[static_cast<std::size_t>(v)] = 1;
    self(self, v + 1, size);
    // or v matches a later free neighbour
    for (int u : g.neighbors(v))
      if (u > v && !used[static_cast<std::size_t>(u)]) {
        used[static_cast<std::size_t>(u)] = 1;
        self(self, v + 1, size + 1);
        used[static_cast<std::size_t>(u)] = 0;
      }
    used[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace specmatch::testing

#endif
