#include "pcprod/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "pcprod/error.hpp"

namespace pcprod {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::kInvalidParameter:
    return "invalid-parameter";
  case ErrorKind::kSearchBudgetExceeded:
    return "search-budget-exceeded";
  case ErrorKind::kResourceExceeded:
    return "resource-exceeded";
  case ErrorKind::kParse:
    return "parse-error";
  case ErrorKind::kIo:
    return "io-error";
  }
  return "unknown";
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0)
    throw_invalid("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count_));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
      throw_invalid("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                    std::to_string(vertex_count_ - 1));
    if (u == v)
      throw_invalid("edge " + std::to_string(i) + " is a self-loop at vertex " +
                    std::to_string(u));
    if (edge_between(u, v))
      throw_invalid("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    const auto id = static_cast<EdgeId>(i);
    adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count_; ++v)
    best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_)
    return std::nullopt;
  // scan the shorter list
  if (degree(b) < degree(a))
    std::swap(a, b);
  for (const auto &inc : incident(a))
    if (inc.neighbor == b)
      return inc.edge;
  return std::nullopt;
}

bool Graph::is_complete() const {
  const auto n = static_cast<long long>(vertex_count_);
  return static_cast<long long>(edges_.size()) == n * (n - 1) / 2;
}

// ---------------------------------------------------------------------------
// generators

Graph make_path(int n) {
  if (n < 1)
    throw_invalid("path needs at least 1 vertex, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3)
    throw_invalid("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
  if (n < 1)
    throw_invalid("complete graph needs at least 1 vertex, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
  if (leaves < 1)
    throw_invalid("star needs at least 1 leaf, got " + std::to_string(leaves));
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i)
    edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i)
    edges.push_back({i, (i + 1) % 5});
  for (Vertex i = 0; i < 5; ++i)
    edges.push_back({i, i + 5});
  for (Vertex i = 0; i < 5; ++i)
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  return Graph(10, std::move(edges));
}

Graph make_hypercube(int dimension) {
  if (dimension < 0 || dimension > 20)
    throw_invalid("hypercube dimension must be in 0..20, got " + std::to_string(dimension));
  const int n = 1 << dimension;
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x)
    for (int b = 0; b < dimension; ++b) {
      const Vertex y = x ^ (1 << b);
      if (y > x)
        edges.push_back({x, y});
    }
  return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// traversals

std::vector<Distance> bfs_distances(const Graph &g, Vertex source) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const auto &inc : g.incident(x)) {
      auto &d = dist[static_cast<std::size_t>(inc.neighbor)];
      if (!d) {
        d = *dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

Distance distance(const Graph &g, Vertex u, Vertex v) {
  return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

Distance diameter(const Graph &g) {
  int best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s)
    for (const auto &d : bfs_distances(g, s)) {
      if (!d)
        return kUnreachable;
      best = std::max(best, *d);
    }
  return best;
}

std::vector<int> component_labels(const Graph &g) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0)
      continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto &inc : g.incident(x))
        if (label[static_cast<std::size_t>(inc.neighbor)] < 0) {
          label[static_cast<std::size_t>(inc.neighbor)] = next;
          stack.push_back(inc.neighbor);
        }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph &g) {
  const auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

Bipartition is_bipartite(const Graph &g) {
  Bipartition result;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> side(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0)
      continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      const int sx = side[static_cast<std::size_t>(x)];
      for (const auto &inc : g.incident(x)) {
        int &sy = side[static_cast<std::size_t>(inc.neighbor)];
        if (sy < 0) {
          sy = 1 - sx;
          stack.push_back(inc.neighbor);
        } else if (sy == sx) {
          return result;
        }
      }
    }
  }
  result.valid = true;
  result.side.assign(side.begin(), side.end());
  return result;
}

int girth(const Graph &g) {
  int best = std::numeric_limits<int>::max();
  // shortest cycle through each edge: remove it and measure the detour
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto &inc : g.incident(x)) {
        if (inc.edge == e || dist[static_cast<std::size_t>(inc.neighbor)] >= 0)
          continue;
        dist[static_cast<std::size_t>(inc.neighbor)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.neighbor);
      }
    }
    if (dist[static_cast<std::size_t>(v)] >= 0)
      best = std::min(best, dist[static_cast<std::size_t>(v)] + 1);
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

std::vector<ParityDistances> parity_distances_from(const Graph &g, Vertex source) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  // state index = 2 * vertex + parity
  std::vector<int> dist(2 * n, -1);
  std::deque<std::size_t> queue;
  const auto start = 2 * static_cast<std::size_t>(source);
  dist[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    const auto state = queue.front();
    queue.pop_front();
    const auto x = static_cast<Vertex>(state / 2);
    const auto parity = state % 2;
    for (const auto &inc : g.incident(x)) {
      const auto next = 2 * static_cast<std::size_t>(inc.neighbor) + (1 - parity);
      if (dist[next] < 0) {
        dist[next] = dist[state] + 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<ParityDistances> rows(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[2 * v] >= 0)
      rows[v].even = dist[2 * v];
    if (dist[2 * v + 1] >= 0)
      rows[v].odd = dist[2 * v + 1];
  }
  return rows;
}

ParityDistances parity_distances(const Graph &g, Vertex u, Vertex v) {
  return parity_distances_from(g, u)[static_cast<std::size_t>(v)];
}

// Edge-stack biconnected components (Hopcroft-Tarjan), iterative.
BlockDecomposition blocks(const Graph &g) {
  BlockDecomposition out;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  out.block_of_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> edge_stack;

  struct Frame {
    Vertex v;
    EdgeId via; // edge used to enter v, -1 at the root
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;

  auto close_block = [&](EdgeId last) {
    std::vector<EdgeId> block;
    while (true) {
      const EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == last)
        break;
    }
    std::sort(block.begin(), block.end());
    const int id = static_cast<int>(out.blocks.size());
    for (const EdgeId e : block)
      out.block_of_edge[static_cast<std::size_t>(e)] = id;
    out.is_bridge.push_back(block.size() == 1);
    out.blocks.push_back(std::move(block));
  };

  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0)
      continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame &f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const auto [w, e] = inc[f.next++];
        if (e == f.via)
          continue;
        const auto vi = static_cast<std::size_t>(f.v);
        const auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          edge_stack.push_back(e);
          disc[wi] = low[wi] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[wi] < disc[vi]) {
          edge_stack.push_back(e); // back edge
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty())
        break;
      const auto parent = static_cast<std::size_t>(stack.back().v);
      const auto child = static_cast<std::size_t>(done.v);
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent])
        close_block(done.via);
    }
  }
  return out;
}

std::vector<Subgraph> edge_components(const Graph &g, std::span<const EdgeId> edge_set) {
  const Graph sub = spanning_subgraph(g, edge_set);
  const auto label = component_labels(sub);
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> comp_of_label(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Subgraph> comps;
  std::vector<std::vector<Edge>> comp_edges;

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (sub.degree(v) == 0)
      continue;
    const auto l = static_cast<std::size_t>(label[static_cast<std::size_t>(v)]);
    if (comp_of_label[l] < 0) {
      comp_of_label[l] = static_cast<int>(comps.size());
      comps.emplace_back();
      comp_edges.emplace_back();
    }
    auto &c = comps[static_cast<std::size_t>(comp_of_label[l])];
    local[static_cast<std::size_t>(v)] = static_cast<int>(c.vertices.size());
    c.vertices.push_back(v);
  }
  for (EdgeId se = 0; se < sub.edge_count(); ++se) {
    const auto [u, v] = sub.edge(se);
    const auto ci = static_cast<std::size_t>(
        comp_of_label[static_cast<std::size_t>(label[static_cast<std::size_t>(u)])]);
    comp_edges[ci].push_back(
        {local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]});
    comps[ci].edges.push_back(edge_set[static_cast<std::size_t>(se)]);
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    comps[i].graph =
        Graph(static_cast<int>(comps[i].vertices.size()), std::move(comp_edges[i]));
  return comps;
}

Graph spanning_subgraph(const Graph &g, std::span<const EdgeId> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (const EdgeId e : keep) {
    if (e < 0 || e >= g.edge_count())
      throw_invalid("edge index " + std::to_string(e) + " out of range");
    edges.push_back(g.edge(e));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

} // namespace pcprod
