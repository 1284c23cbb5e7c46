#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pcprod {

using Vertex = int;
using EdgeId = int;

// Length of a shortest path or walk. nullopt means no such path/walk exists
// (unreachable, or infinite diameter).
using Distance = std::optional<int>;
inline constexpr Distance kUnreachable = std::nullopt;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge &, const Edge &) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1. Edges keep the index they were
// inserted with; colorings address edges by that index. Immutable once built.
class Graph {
public:
  Graph() = default;

  // Throws kInvalidParameter on self-loops, duplicates or out-of-range
  // endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;

  bool has_edge(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

  bool is_complete() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

struct Bipartition {
  std::vector<std::uint8_t> side;
  bool valid = false;
};

struct BlockDecomposition {
  // Each block is a set of edge indices; blocks partition E(G).
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<bool> is_bridge;
  std::vector<int> block_of_edge;
};

// A connected piece of a larger graph, re-indexed locally.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertices; // local vertex -> host vertex
  std::vector<EdgeId> edges;    // local edge -> host edge
};

// Generators. All throw kInvalidParameter for out-of-range sizes.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);
Graph make_petersen();
Graph make_hypercube(int dimension);

// Traversals.
std::vector<Distance> bfs_distances(const Graph &g, Vertex source);
Distance distance(const Graph &g, Vertex u, Vertex v);
Distance diameter(const Graph &g);
bool is_connected(const Graph &g);
std::vector<int> component_labels(const Graph &g);
Bipartition is_bipartite(const Graph &g);
int girth(const Graph &g); // 0 for forests

struct ParityDistances {
  Distance even;
  Distance odd;
};

// Shortest even and odd walk lengths from u to v, via BFS over
// (vertex, parity). For u == v the odd entry is the shortest odd closed walk.
ParityDistances parity_distances(const Graph &g, Vertex u, Vertex v);
// Rows for every target from one source.
std::vector<ParityDistances> parity_distances_from(const Graph &g, Vertex source);

BlockDecomposition blocks(const Graph &g);

// Subgraph formed by a subset of edges, split into connected components with
// at least one edge. Component order follows the smallest host vertex.
std::vector<Subgraph> edge_components(const Graph &g, std::span<const EdgeId> edge_set);

// Spanning subgraph keeping only the listed edges, in the listed order.
Graph spanning_subgraph(const Graph &g, std::span<const EdgeId> keep);

} // namespace pcprod
