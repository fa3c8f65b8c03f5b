#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coronae/errors.hpp"
#include "coronae/graph.hpp"

namespace coronae {

enum class ProductOp { corona, edge_corona, r_graph, r_vertex, r_edge };

inline std::string product_op_name(ProductOp op) {
  switch (op) {
    case ProductOp::corona: return "corona";
    case ProductOp::edge_corona: return "edge-corona";
    case ProductOp::r_graph: return "r-graph";
    case ProductOp::r_vertex: return "r-vertex";
    case ProductOp::r_edge: return "r-edge";
  }
  return "?";
}

// Contiguous labeled vertex ranges of a product graph: G1 vertices first,
// then I(G1) where present, then one contiguous range per copy of G2.
// Copies are ordered by their attachment object (vertex index or canonical
// edge index); within a copy, G2's own vertex order is preserved. This makes
// the block matrix forms of the factorizations literal sub-matrices.
struct BlockRange {
  std::string label;
  int begin = 0;
  int end = 0;  // exclusive
};

struct ProductLayout {
  ProductOp op = ProductOp::corona;
  std::vector<BlockRange> blocks;
};

struct ProductResult {
  Graph graph;
  ProductLayout layout;
};

// G1 o G2: one copy of G1, n1 copies of G2, vertex i joined to all of copy i.
inline ProductResult corona(const Graph& g1, const Graph& g2) {
  if (g1.n() < 1) throw EmptyG1("corona: G1 must have at least one vertex");
  const int n1 = g1.n(), n2 = g2.n();
  std::vector<std::pair<int, int>> e = g1.edges();
  ProductLayout layout{ProductOp::corona, {{"G1", 0, n1}}};
  for (int i = 0; i < n1; ++i) {
    const int base = n1 + i * n2;
    layout.blocks.push_back({"copy" + std::to_string(i), base, base + n2});
    for (const auto& [u, v] : g2.edges()) e.emplace_back(base + u, base + v);
    for (int v = 0; v < n2; ++v) e.emplace_back(i, base + v);
  }
  return {Graph::from_edge_list(n1 * (n2 + 1), std::move(e)), std::move(layout)};
}

// G1 <> G2: one copy of G1, m1 copies of G2; both endpoints of edge i are
// joined to every vertex of copy i (copies in canonical edge order).
inline ProductResult edge_corona(const Graph& g1, const Graph& g2) {
  if (g1.m() < 1) throw NoEdgesInG1("edge_corona: G1 must have at least one edge");
  const int n1 = g1.n(), m1 = g1.m(), n2 = g2.n();
  std::vector<std::pair<int, int>> e = g1.edges();
  ProductLayout layout{ProductOp::edge_corona, {{"G1", 0, n1}}};
  for (int i = 0; i < m1; ++i) {
    const auto& [a, b] = g1.edges()[static_cast<std::size_t>(i)];
    const int base = n1 + i * n2;
    layout.blocks.push_back({"copy" + std::to_string(i), base, base + n2});
    for (const auto& [u, v] : g2.edges()) e.emplace_back(base + u, base + v);
    for (int v = 0; v < n2; ++v) {
      e.emplace_back(a, base + v);
      e.emplace_back(b, base + v);
    }
  }
  return {Graph::from_edge_list(n1 + m1 * n2, std::move(e)), std::move(layout)};
}

// R(G): one new vertex per edge, joined to that edge's endpoints. Identical
// to edge_corona(G, K1); the I(G) block follows the canonical edge order.
inline ProductResult r_graph(const Graph& g) {
  if (g.m() < 1) throw NoEdges("r_graph: G must have at least one edge");
  auto res = edge_corona(g, Graph::from_edge_list(1, {}));
  res.layout.op = ProductOp::r_graph;
  res.layout.blocks = {{"G", 0, g.n()}, {"I", g.n(), g.n() + g.m()}};
  return res;
}

// G1 (.) G2: R(G1) plus n1 copies of G2, copy i joined to original vertex i.
// Block order: V(G1) | I(G1) | copies.
inline ProductResult r_vertex_corona(const Graph& g1, const Graph& g2) {
  if (g1.m() < 1) throw NoEdgesInG1("r_vertex_corona: G1 must have at least one edge");
  const int n1 = g1.n(), m1 = g1.m(), n2 = g2.n();
  std::vector<std::pair<int, int>> e = g1.edges();
  for (int i = 0; i < m1; ++i) {
    const auto& [a, b] = g1.edges()[static_cast<std::size_t>(i)];
    e.emplace_back(a, n1 + i);
    e.emplace_back(b, n1 + i);
  }
  ProductLayout layout{ProductOp::r_vertex, {{"G1", 0, n1}, {"I", n1, n1 + m1}}};
  for (int i = 0; i < n1; ++i) {
    const int base = n1 + m1 + i * n2;
    layout.blocks.push_back({"copy" + std::to_string(i), base, base + n2});
    for (const auto& [u, v] : g2.edges()) e.emplace_back(base + u, base + v);
    for (int v = 0; v < n2; ++v) e.emplace_back(i, base + v);
  }
  return {Graph::from_edge_list(n1 * (1 + n2) + m1, std::move(e)), std::move(layout)};
}

// G1 (-) G2: R(G1) plus m1 copies of G2, copy i joined to the i-th added
// edge vertex. Block order: V(G1) | I(G1) | copies.
inline ProductResult r_edge_corona(const Graph& g1, const Graph& g2) {
  if (g1.m() < 1) throw NoEdgesInG1("r_edge_corona: G1 must have at least one edge");
  const int n1 = g1.n(), m1 = g1.m(), n2 = g2.n();
  std::vector<std::pair<int, int>> e = g1.edges();
  for (int i = 0; i < m1; ++i) {
    const auto& [a, b] = g1.edges()[static_cast<std::size_t>(i)];
    e.emplace_back(a, n1 + i);
    e.emplace_back(b, n1 + i);
  }
  ProductLayout layout{ProductOp::r_edge, {{"G1", 0, n1}, {"I", n1, n1 + m1}}};
  for (int i = 0; i < m1; ++i) {
    const int base = n1 + m1 + i * n2;
    layout.blocks.push_back({"copy" + std::to_string(i), base, base + n2});
    for (const auto& [u, v] : g2.edges()) e.emplace_back(base + u, base + v);
    for (int v = 0; v < n2; ++v) e.emplace_back(n1 + i, base + v);
  }
  return {Graph::from_edge_list(n1 + m1 * (1 + n2), std::move(e)), std::move(layout)};
}

inline ProductResult apply_product(ProductOp op, const Graph& g1, const Graph& g2) {
  switch (op) {
    case ProductOp::corona: return corona(g1, g2);
    case ProductOp::edge_corona: return edge_corona(g1, g2);
    case ProductOp::r_graph: return r_graph(g1);
    case ProductOp::r_vertex: return r_vertex_corona(g1, g2);
    case ProductOp::r_edge: return r_edge_corona(g1, g2);
  }
  throw BadParams("apply_product: unknown op");
}

}  // namespace coronae
