#include "specmatch/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace specmatch {

Graph::Graph(int order) : n_(order) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  if (order > kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(order) +
                                " exceeds the configured cap of " + std::to_string(kMaxOrder));
  stride_ = (order + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[static_cast<std::size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u) + " rejected");
  std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * stride_ + v / 64];
  if ((wu >> (v % 64)) & 1u) return;  // duplicates collapse
  wu |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++edges_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < stride_; ++w)
    d += std::popcount(bits_[static_cast<std::size_t>(v) * stride_ + w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree(v)));
  for_each_neighbor(v, [&](int u) { out.push_back(u); });
  return out;
}

std::span<const std::uint64_t> Graph::row_words(int v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * stride_,
          static_cast<std::size_t>(stride_)};
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  Graph out(ng + nh);
  for (int u = 0; u < ng; ++u)
    g.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(u, v);
    });
  for (int u = 0; u < nh; ++u)
    h.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(ng + u, ng + v);
    });
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  Graph out(ng + nh);
  for (int u = 0; u < ng; ++u)
    g.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(u, v);
    });
  for (int u = 0; u < nh; ++u)
    h.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(ng + u, ng + v);
    });
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph build_split_family(int s, const std::vector<int>& parts) {
  if (s < 1) throw std::invalid_argument("split family needs s >= 1");
  if (parts.empty()) throw std::invalid_argument("split family needs at least one part");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("split family parts must be >= 1");
  Graph tail = complete(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    tail = disjoint_union(tail, complete(parts[i]));
  return join(complete(s), tail);
}

Graph build_g2(int n, int s, int q) {
  if (s < 1 || q < 2 || n - s - q + 1 < 1)
    throw std::invalid_argument("build_g2 requires s >= 1, q >= 2 and n-s-q+1 >= 1");
  std::vector<int> parts(static_cast<std::size_t>(q), 1);
  parts.front() = n - s - q + 1;
  return build_split_family(s, parts);
}

Graph build_g3(int n, int s) {
  if (s < 1 || n - 2 * s - 1 < 1)
    throw std::invalid_argument("build_g3 requires s >= 1 and n >= 2s+2");
  return build_g2(n, s, s + 2);
}

Graph build_g4(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("build_g4 requires an even order n >= 4");
  return build_g2(n, 1, 3);
}

Graph build_g5(int s) {
  if (s < 1) throw std::invalid_argument("build_g5 requires s >= 1");
  return build_split_family(s, std::vector<int>(static_cast<std::size_t>(s) + 2, 1));
}

BipartiteGraph build_gamma(int n, int s, int k) {
  if (!(1 <= k && k < s && s <= n - 1))
    throw std::invalid_argument("build_gamma requires 1 <= k < s <= n-1");
  Graph g(2 * n);
  for (int x = 0; x < n; ++x)
    for (int y = n; y < 2 * n; ++y) {
      if (x < s && y >= n + k) continue;  // removed block S x (Y - N(S))
      g.add_edge(x, y);
    }
  Bipartition sides;
  sides.left.resize(static_cast<std::size_t>(n));
  sides.right.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sides.left[static_cast<std::size_t>(i)] = i;
    sides.right[static_cast<std::size_t>(i)] = n + i;
  }
  return {std::move(g), std::move(sides)};
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    g.for_each_neighbor(v, [&](int u) {
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(u);
      }
    });
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int v : b.left) {
    if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) return false;
    side[static_cast<std::size_t>(v)] = 0;
  }
  for (int v : b.right) {
    if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) return false;
    side[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[static_cast<std::size_t>(v)] == -1) return false;
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    g.for_each_neighbor(u, [&](int v) {
      if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<Bipartition> two_color_bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      bool odd_cycle = false;
      g.for_each_neighbor(v, [&](int u) {
        int& cu = color[static_cast<std::size_t>(u)];
        if (cu == -1) {
          cu = 1 - color[static_cast<std::size_t>(v)];
          q.push(u);
        } else if (cu == color[static_cast<std::size_t>(v)]) {
          odd_cycle = true;
        }
      });
      if (odd_cycle) return std::nullopt;
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? b.left : b.right).push_back(v);
  return b;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip_graph6_wrapping(std::string_view text) {
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
    text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
  const std::string_view text = strip_graph6_wrapping(raw);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  long n = 0;
  const unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == 126) {  // '~': extended size form
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("8-byte graph6 size form not supported", 1);
    if (text.size() < 4) throw ParseError("truncated extended graph6 size", text.size());
    for (std::size_t i = 1; i <= 3; ++i) {
      const unsigned char c = static_cast<unsigned char>(text[i]);
      if (c < 63 || c > 126) throw ParseError("graph6 size byte out of range", i);
      n = (n << 6) | (c - 63);
    }
    pos = 4;
  } else if (first >= 63 && first <= 125) {
    n = first - 63;
    pos = 1;
  } else {
    throw ParseError("graph6 size byte out of range", 0);
  }

  if (n < 1) throw ParseError("graph6 order 0 not supported", 0);
  if (n > Graph::kMaxOrder)
    throw ParseError("graph6 order exceeds the configured cap", 0);

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes)
    throw ParseError("graph6 string truncated", text.size());
  if (text.size() - pos > nbytes)
    throw ParseError("trailing data after graph6 adjacency bits", pos + nbytes);

  Graph g(static_cast<int>(n));
  std::size_t bit_index = 0;
  int i = 0, j = 1;  // upper triangle, column-major
  for (std::size_t b = 0; b < nbytes; ++b) {
    const unsigned char c = static_cast<unsigned char>(text[pos + b]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos + b);
    const unsigned value = c - 63;
    for (int k = 5; k >= 0; --k, ++bit_index) {
      const bool bit = (value >> k) & 1u;
      if (bit_index < nbits) {
        if (bit) g.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (bit) {
        throw ParseError("nonzero padding bits in graph6 string", pos + b);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6 encoding emitted only for n <= 62");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  unsigned group = 0;
  int used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>(63 + (group << (6 - used))));
  return out;
}

namespace {

int parse_int_token(const std::string& token, const char* what) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument(std::string("non-numeric ") + what + " token '" + token + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw std::invalid_argument("empty edge list input");
  const int n = parse_int_token(token, "order");
  if (n < 1) throw std::invalid_argument("edge list order must be at least 1");
  Graph g(n);
  std::string a, b;
  while (in >> a) {
    if (!(in >> b)) throw std::invalid_argument("edge list ends with a dangling endpoint");
    const int u = parse_int_token(a, "vertex");
    const int v = parse_int_token(b, "vertex");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint outside [0, " + std::to_string(n) + ")");
    g.add_edge(u, v);  // throws on self-loop
  }
  return g;
}

}  // namespace specmatch
