#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coronae/errors.hpp"

namespace coronae {

// Simple undirected graph: vertex count plus a canonical edge list.
// Every stored edge satisfies 0 <= u < v < n; the list is sorted
// lexicographically and free of duplicates. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, std::vector<std::pair<int, int>> raw_edges) {
    if (n < 0) throw BadParams("from_edge_list: negative vertex count");
    for (auto& [u, v] : raw_edges) {
      if (u == v) throw LoopEdge("loop edge at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw EndpointOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") outside [0," + std::to_string(n) + ")");
      if (u > v) std::swap(u, v);
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(raw_edges);
    return g;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  std::vector<int> degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
      d[static_cast<std::size_t>(u)]++;
      d[static_cast<std::size_t>(v)]++;
    }
    return d;
  }

  // k when every vertex has degree k, empty otherwise.
  std::optional<int> is_regular() const {
    if (n_ == 0) throw EmptyGraph("is_regular: empty graph");
    const auto d = degree_sequence();
    for (int v : d)
      if (v != d[0]) return std::nullopt;
    return d[0];
  }

  std::vector<std::vector<int>> adjacency_lists() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const auto& [u, v] : edges_) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    const auto adj = adjacency_lists();
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          count++;
          q.push(w);
        }
    }
    return count == n_;
  }

  static Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges_;
    for (const auto& [u, v] : b.edges_) e.emplace_back(u + a.n_, v + a.n_);
    return from_edge_list(a.n_ + b.n_, std::move(e));
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// --- graph6 format (standard: N(n) header, then the upper triangle in
// column order (v, u<v), packed 6 bits per printable byte offset 63) ---

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw MalformedHeader("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw NonPrintableByte("graph6: byte out of printable range 63..126");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw MalformedHeader("graph6: 8-byte headers (n >= 2^18) unsupported");
    if (text.size() < 4) throw MalformedHeader("graph6: truncated 4-byte header");
    n = (static_cast<long long>(text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < need) throw TruncatedBitVector("graph6: bit vector too short");
  if (text.size() - pos > need) throw MalformedHeader("graph6: trailing bytes after bit vector");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      const int byte = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  return Graph::from_edge_list(static_cast<int>(n), std::move(edges));
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < (1 << 18)) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw BadParams("write_graph6: order above 2^18 unsupported");
  }
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : g.edges())
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  long long bit = 0;
  int acc = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      acc = (acc << 1) | adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
      }
    }
  if (bit % 6 != 0) out.push_back(static_cast<char>((acc << (6 - bit % 6)) + 63));
  return out;
}

// --- edge-list text format: "n m" then m lines "u v"; '#' starts a comment ---

inline Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a >> b)) continue;
    if (n < 0) {
      n = a;
      m = b;
    } else {
      edges.emplace_back(a, b);
    }
  }
  if (n < 0) throw MalformedHeader("edge list: missing \"n m\" line");
  if (static_cast<int>(edges.size()) != m)
    throw MalformedHeader("edge list: expected " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
  return Graph::from_edge_list(n, std::move(edges));
}

inline std::string write_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

// --- named graphs ---

namespace detail {

inline Graph make_path(int n) {
  if (n < 1) throw BadParams("path: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, std::move(e));
}

inline Graph make_cycle(int n) {
  if (n < 3) throw BadParams("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, std::move(e));
}

inline Graph make_complete(int n) {
  if (n < 1) throw BadParams("complete: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edge_list(n, std::move(e));
}

// Part A first (vertices 0..a-1), then part B.
inline Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw BadParams("complete_bipartite: parts >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edge_list(a + b, std::move(e));
}

// Cayley graph on Z4 x Z4 with connection set +-{(1,0),(0,1),(1,1)}.
inline Graph make_shrikhande() {
  std::vector<std::pair<int, int>> e;
  const int dx[] = {1, 0, 1};
  const int dy[] = {0, 1, 1};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int k = 0; k < 3; ++k) {
        const int u = 4 * x + y;
        const int v = 4 * ((x + dx[k]) % 4) + (y + dy[k]) % 4;
        e.emplace_back(u, v);
      }
  return Graph::from_edge_list(16, std::move(e));
}

// 4x4 rook's graph: vertices are grid cells, adjacent iff same row or column.
inline Graph make_rook44() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4) e.emplace_back(u, v);
  return Graph::from_edge_list(16, std::move(e));
}

inline Graph make_petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edge_list(10, std::move(e));
}

}  // namespace detail

inline const std::vector<std::string>& named_graph_names() {
  static const std::vector<std::string> names = {
      "path", "cycle", "complete", "complete_bipartite", "shrikhande", "rook44", "petersen"};
  return names;
}

inline Graph named_graph(const std::string& name, const std::vector<int>& params = {}) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw BadParams(name + ": expected " + std::to_string(k) + " parameter(s)");
  };
  if (name == "path") {
    want(1);
    return detail::make_path(params[0]);
  }
  if (name == "cycle") {
    want(1);
    return detail::make_cycle(params[0]);
  }
  if (name == "complete") {
    want(1);
    return detail::make_complete(params[0]);
  }
  if (name == "complete_bipartite") {
    want(2);
    return detail::make_complete_bipartite(params[0], params[1]);
  }
  if (name == "shrikhande") {
    want(0);
    return detail::make_shrikhande();
  }
  if (name == "rook44") {
    want(0);
    return detail::make_rook44();
  }
  if (name == "petersen") {
    want(0);
    return detail::make_petersen();
  }
  throw UnknownName("unknown named graph: " + name);
}

// --- cheap structural invariants ---

inline std::vector<std::vector<std::uint64_t>> adjacency_bitrows(const Graph& g) {
  const std::size_t words = static_cast<std::size_t>((g.n() + 63) / 64);
  std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(g.n()),
                                               std::vector<std::uint64_t>(words, 0));
  for (const auto& [u, v] : g.edges()) {
    rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v / 64)] |= 1ULL << (v % 64);
    rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u / 64)] |= 1ULL << (u % 64);
  }
  return rows;
}

inline std::vector<int> triangles_per_vertex(const Graph& g) {
  const auto rows = adjacency_bitrows(g);
  std::vector<int> t(static_cast<std::size_t>(g.n()), 0);
  for (const auto& [u, v] : g.edges()) {
    int common = 0;
    for (std::size_t w = 0; w < rows[0].size(); ++w)
      common += __builtin_popcountll(rows[static_cast<std::size_t>(u)][w] &
                                     rows[static_cast<std::size_t>(v)][w]);
    // each common neighbor closes one triangle on this edge
    t[static_cast<std::size_t>(u)] += common;
    t[static_cast<std::size_t>(v)] += common;
  }
  for (auto& v : t) v /= 2;  // each triangle at a vertex counted once per incident edge pair
  return t;
}

inline long long four_cycle_count(const Graph& g) {
  const auto rows = adjacency_bitrows(g);
  long long total = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      long long common = 0;
      for (std::size_t w = 0; w < rows[0].size(); ++w)
        common += __builtin_popcountll(rows[static_cast<std::size_t>(u)][w] &
                                       rows[static_cast<std::size_t>(v)][w]);
      total += common * (common - 1) / 2;
    }
  return total / 2;  // each 4-cycle has two diagonal pairs
}

inline long long four_clique_count(const Graph& g) {
  const auto rows = adjacency_bitrows(g);
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  long long total = 0;
  for (const auto& [u, v] : g.edges()) {
    // common neighborhood of the edge, then count edges inside it
    std::vector<std::uint64_t> common(words);
    for (std::size_t w = 0; w < words; ++w)
      common[w] = rows[static_cast<std::size_t>(u)][w] & rows[static_cast<std::size_t>(v)][w];
    for (int x = v + 1; x < g.n(); ++x) {
      if (!((common[static_cast<std::size_t>(x / 64)] >> (x % 64)) & 1)) continue;
      for (int y = x + 1; y < g.n(); ++y) {
        if (!((common[static_cast<std::size_t>(y / 64)] >> (y % 64)) & 1)) continue;
        if ((rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y / 64)] >> (y % 64)) & 1)
          total++;
      }
    }
  }
  // every K4 {a<b<c<d} is counted exactly once, via edge (a,b) and pair (c,d)
  return total;
}

}  // namespace coronae
