#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "coronae/graph.hpp"

namespace testutil {

// Erdos-Renyi G(n, p)
inline coronae::Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return coronae::Graph::from_edge_list(n, std::move(e));
}

inline coronae::Graph random_graph_with_edge(std::mt19937& rng, int n, double p = 0.5) {
  for (;;) {
    coronae::Graph g = random_graph(rng, n, p);
    if (g.m() >= 1) return g;
  }
}

// Circulant C_n(S) with a random nonempty connection set: always regular.
inline coronae::Graph random_regular(std::mt19937& rng, int n) {
  const int half = n / 2;
  std::set<int> s;
  std::uniform_int_distribution<int> pick(1, half);
  const int want = 1 + static_cast<int>(rng() % static_cast<unsigned>(half));
  while (static_cast<int>(s.size()) < want) s.insert(pick(rng));
  std::vector<std::pair<int, int>> e;
  for (int off : s)
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + off) % n);
  return coronae::Graph::from_edge_list(n, std::move(e));
}

}  // namespace testutil
