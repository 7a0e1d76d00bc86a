#ifndef SPECMATCH_MATCHING_HPP
#define SPECMATCH_MATCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "specmatch/graph.hpp"

namespace specmatch {

struct MatchingResult {
  std::vector<std::pair<int, int>> matched_edges;  // u < v, sorted
  bool is_perfect;
};

enum class WitnessKind { tutte, hall };

/// Certificate that no perfect matching (or X-saturating matching) exists.
struct Witness {
  WitnessKind kind;
  std::vector<int> set_s;  // ascending
  int deficiency;          // tutte: o(G-S)-|S|; hall: |S|-|N(S)|
};

/// Maximum-cardinality matching by blossom contraction; deterministic.
MatchingResult max_matching_general(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// Connected components of G - removed with an odd vertex count.
int odd_components(const Graph& g, const std::vector<int>& removed);

/// Exhaustive scan over vertex subsets for S with o(G-S) > |S|. Returns the
/// smallest violating S (lexicographic tie-break) or nothing.
std::optional<Witness> tutte_violation(const Graph& g, int subset_cap = 24);

/// Maximum matching by Hopcroft-Karp layered augmentation.
MatchingResult max_matching_bipartite(const Graph& g, const Bipartition& b);

/// Exhaustive scan over subsets of the left side for S with |N(S)| < |S|.
std::optional<Witness> hall_violation(const Graph& g, const Bipartition& b,
                                      int side_cap = 24);

}  // namespace specmatch

#endif
