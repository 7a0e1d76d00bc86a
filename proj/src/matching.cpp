#include "specmatch/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace specmatch {

namespace {

// Blossom-contracting augmenting path search, O(V^3) overall.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0) {}

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v)
      if (match_[static_cast<std::size_t>(v)] < 0)
        g_.for_each_neighbor(v, [&](int u) {
          if (match_[static_cast<std::size_t>(v)] < 0 && match_[static_cast<std::size_t>(u)] < 0) {
            match_[static_cast<std::size_t>(v)] = u;
            match_[static_cast<std::size_t>(u)] = v;
          }
        });
    for (int v = 0; v < n_; ++v)
      if (match_[static_cast<std::size_t>(v)] < 0) augment_from(v);
    return match_;
  }

 private:
  int lca(int a, int b) const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      const int ma = match_[static_cast<std::size_t>(a)];
      if (ma < 0) break;
      a = parent_[static_cast<std::size_t>(ma)];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int stem, int child, std::vector<char>& in_blossom) {
    while (base_[static_cast<std::size_t>(v)] != stem) {
      const int mv = match_[static_cast<std::size_t>(v)];
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  void augment_along(int v) {
    while (v >= 0) {
      const int pv = parent_[static_cast<std::size_t>(v)];
      const int next = match_[static_cast<std::size_t>(pv)];
      match_[static_cast<std::size_t>(v)] = pv;
      match_[static_cast<std::size_t>(pv)] = v;
      v = next;
    }
  }

  bool augment_from(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    used[static_cast<std::size_t>(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      bool augmented = false;
      g_.for_each_neighbor(v, [&](int to) {
        if (augmented) return;
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          return;
        const int mt = match_[static_cast<std::size_t>(to)];
        if (to == root || (mt >= 0 && parent_[static_cast<std::size_t>(mt)] >= 0)) {
          // Odd cycle through the tree: contract the blossom.
          const int stem = lca(v, to);
          std::vector<char> in_blossom(static_cast<std::size_t>(n_), 0);
          mark_path(v, stem, to, in_blossom);
          mark_path(to, stem, v, in_blossom);
          for (int i = 0; i < n_; ++i)
            if (in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = stem;
              if (!used[static_cast<std::size_t>(i)]) {
                used[static_cast<std::size_t>(i)] = 1;
                q.push(i);
              }
            }
        } else if (parent_[static_cast<std::size_t>(to)] < 0) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (mt < 0) {
            augment_along(to);
            augmented = true;
          } else if (!used[static_cast<std::size_t>(mt)]) {
            used[static_cast<std::size_t>(mt)] = 1;
            q.push(mt);
          }
        }
      });
      if (augmented) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
};

MatchingResult result_from_mates(const std::vector<int>& match, int n) {
  MatchingResult r;
  for (int v = 0; v < n; ++v)
    if (match[static_cast<std::size_t>(v)] > v)
      r.matched_edges.emplace_back(v, match[static_cast<std::size_t>(v)]);
  r.is_perfect = 2 * static_cast<int>(r.matched_edges.size()) == n;
  return r;
}

// Visit k-subsets of {0..m-1} in lexicographic order until fn returns true.
template <typename Fn>
bool for_each_combination(int m, int k, Fn&& fn) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  if (k > m) return false;
  for (;;) {
    if (fn(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

MatchingResult max_matching_general(const Graph& g) {
  BlossomMatcher matcher(g);
  return result_from_mates(matcher.solve(), g.order());
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return max_matching_general(g).is_perfect;
}

int odd_components(const Graph& g, const std::vector<int>& removed) {
  const int n = g.order();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int v : removed) {
    if (v < 0 || v >= n) throw std::invalid_argument("removed vertex out of range");
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> seen = gone;
  int odd = 0;
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    int size = 0;
    stack.assign(1, v);
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++size;
      g.for_each_neighbor(u, [&](int w) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      });
    }
    odd += size % 2;
  }
  return odd;
}

std::optional<Witness> tutte_violation(const Graph& g, int subset_cap) {
  const int n = g.order();
  if (n > subset_cap)
    throw std::invalid_argument(
        "exhaustive subset scan capped at " + std::to_string(subset_cap) +
        " vertices; use max_matching_general for larger graphs");

  // Adjacency as small masks so component counting stays cheap.
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    g.for_each_neighbor(v, [&](int u) { adj[static_cast<std::size_t>(v)] |= 1u << u; });

  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1u;
  auto odd_components_masked = [&](std::uint32_t removed) {
    std::uint32_t alive = all & ~removed;
    int odd = 0;
    while (alive != 0) {
      std::uint32_t comp = alive & (~alive + 1);  // lowest alive bit
      for (;;) {
        std::uint32_t frontier = 0;
        std::uint32_t scan = comp;
        while (scan != 0) {
          const int v = std::countr_zero(scan);
          scan &= scan - 1;
          frontier |= adj[static_cast<std::size_t>(v)];
        }
        const std::uint32_t grown = (comp | frontier) & alive;
        if (grown == comp) break;
        comp = grown;
      }
      odd += std::popcount(comp) % 2;
      alive &= ~comp;
    }
    return odd;
  };

  for (int k = 0; k <= n; ++k) {
    std::optional<Witness> found;
    for_each_combination(n, k, [&](const std::vector<int>& pick) {
      std::uint32_t mask = 0;
      for (int v : pick) mask |= 1u << v;
      const int odd = odd_components_masked(mask);
      if (odd > k) {
        found = Witness{WitnessKind::tutte, pick, odd - k};
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

MatchingResult max_matching_bipartite(const Graph& g, const Bipartition& b) {
  if (!is_valid_bipartition(g, b))
    throw std::invalid_argument("bipartition inconsistent with the graph's edges");
  const int n = g.order();
  std::vector<int> left = b.left;
  std::sort(left.begin(), left.end());

  constexpr int kInf = 1 << 30;
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n), kInf);

  auto bfs = [&]() {
    std::queue<int> q;
    bool reachable_free = false;
    std::fill(dist.begin(), dist.end(), kInf);
    for (int u : left)
      if (mate[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      g.for_each_neighbor(u, [&](int v) {
        const int w = mate[static_cast<std::size_t>(v)];
        if (w < 0) {
          reachable_free = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      });
    }
    return reachable_free;
  };

  std::function<bool(int)> dfs = [&](int u) {
    bool ok = false;
    g.for_each_neighbor(u, [&](int v) {
      if (ok) return;
      const int w = mate[static_cast<std::size_t>(v)];
      if (w < 0 ||
          (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        mate[static_cast<std::size_t>(u)] = v;
        mate[static_cast<std::size_t>(v)] = u;
        ok = true;
      }
    });
    if (!ok) dist[static_cast<std::size_t>(u)] = kInf;
    return ok;
  };

  while (bfs())
    for (int u : left)
      if (mate[static_cast<std::size_t>(u)] < 0) dfs(u);

  return result_from_mates(mate, n);
}

std::optional<Witness> hall_violation(const Graph& g, const Bipartition& b, int side_cap) {
  if (!is_valid_bipartition(g, b))
    throw std::invalid_argument("bipartition inconsistent with the graph's edges");
  std::vector<int> left = b.left;
  std::sort(left.begin(), left.end());
  const int m = static_cast<int>(left.size());
  if (m > side_cap)
    throw std::invalid_argument("exhaustive Hall scan capped at side size " +
                                std::to_string(side_cap));

  const std::size_t words = g.row_words(0).size();
  std::vector<std::uint64_t> neighborhood(words);
  for (int k = 1; k <= m; ++k) {
    std::optional<Witness> found;
    for_each_combination(m, k, [&](const std::vector<int>& pick) {
      std::fill(neighborhood.begin(), neighborhood.end(), 0);
      for (int idx : pick) {
        const auto row = g.row_words(left[static_cast<std::size_t>(idx)]);
        for (std::size_t w = 0; w < words; ++w) neighborhood[w] |= row[w];
      }
      int size = 0;
      for (std::uint64_t w : neighborhood) size += std::popcount(w);
      if (size < k) {
        std::vector<int> subset;
        subset.reserve(static_cast<std::size_t>(k));
        for (int idx : pick) subset.push_back(left[static_cast<std::size_t>(idx)]);
        found = Witness{WitnessKind::hall, std::move(subset), k - size};
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace specmatch
