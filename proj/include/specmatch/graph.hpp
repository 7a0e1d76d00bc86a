#ifndef SPECMATCH_GRAPH_HPP
#define SPECMATCH_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specmatch/errors.hpp"

namespace specmatch {

/// Simple undirected graph on vertices 0..n-1. No loops, symmetric adjacency.
/// Values are treated as immutable once built; all downstream algebra is
/// dense, so the order is capped.
class Graph {
 public:
  static constexpr int kMaxOrder = 4096;

  explicit Graph(int order);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return edges_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Adjacency row of v as packed 64-bit words (bit u set iff edge uv).
  std::span<const std::uint64_t> row_words(int v) const;

  template <typename Fn>
  void for_each_neighbor(int v, Fn&& fn) const {
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * stride_;
    for (int w = 0; w < stride_; ++w) {
      std::uint64_t word = row[w];
      while (word != 0) {
        int bit = std::countr_zero(word);
        fn(w * 64 + bit);
        word &= word - 1;
      }
    }
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int stride_ = 0;
  int edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Two-sided vertex split; valid when the sides are disjoint, cover all
/// vertices, and no edge stays inside a side.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

struct BipartiteGraph {
  Graph graph;
  Bipartition sides;
};

// Building blocks.
Graph complete(int n);
Graph empty_graph(int n);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

// Extremal families. The joined clique K_s always occupies the lowest vertex
// indices, then the parts in order; this keeps block partitions reproducible.
Graph build_split_family(int s, const std::vector<int>& parts);
Graph build_g2(int n, int s, int q);  // K_s v (K_{n-s-q+1} u complement(K_{q-1}))
Graph build_g3(int n, int s);         // build_g2 with q = s+2
Graph build_g4(int n);                // K_1 v (K_{n-3} u complement(K_2)), n even
Graph build_g5(int s);                // K_s v complement(K_{s+2})

/// Balanced bipartite K_{n,n} minus all edges between S (first s of X) and
/// the n-k non-neighbours of S in Y. X = 0..n-1, Y = n..2n-1, N(S) first.
BipartiteGraph build_gamma(int n, int s, int k);

bool is_connected(const Graph& g);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_valid_bipartition(const Graph& g, const Bipartition& b);

/// Deterministic BFS 2-colouring (roots taken in ascending vertex order,
/// vertex 0 coloured left). Empty result if some cycle is odd.
std::optional<Bipartition> two_color_bipartition(const Graph& g);

// graph6 text format. Encoding emits the single-byte size form (n <= 62);
// parsing also accepts the 4-byte extended size form.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge list format: first token is n, then "u v" pairs. Duplicates collapse.
Graph parse_edge_list(std::string_view text);

}  // namespace specmatch

#endif
