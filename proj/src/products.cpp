#include "pcprod/products.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pcprod/error.hpp"

namespace pcprod {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
  case ProductKind::kCartesian:
    return "cartesian";
  case ProductKind::kStrong:
    return "strong";
  case ProductKind::kLexicographic:
    return "lex";
  case ProductKind::kDirect:
    return "direct";
  }
  return "?";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  if (name == "cartesian")
    return ProductKind::kCartesian;
  if (name == "strong")
    return ProductKind::kStrong;
  if (name == "lex" || name == "lexicographic")
    return ProductKind::kLexicographic;
  if (name == "direct")
    return ProductKind::kDirect;
  return std::nullopt;
}

long long product_edge_count(ProductKind kind, const Graph &g, const Graph &h) {
  const long long ng = g.vertex_count(), nh = h.vertex_count();
  const long long mg = g.edge_count(), mh = h.edge_count();
  switch (kind) {
  case ProductKind::kCartesian:
    return mg * nh + ng * mh;
  case ProductKind::kStrong:
    return mg * nh + ng * mh + 2 * mg * mh;
  case ProductKind::kLexicographic:
    return mg * nh * nh + ng * mh;
  case ProductKind::kDirect:
    return 2 * mg * mh;
  }
  return 0;
}

namespace {

Graph build_product_graph(const Graph &g, const Graph &h, ProductKind kind) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  if (ng == 0 || nh == 0)
    throw_invalid("product factors must be nonempty");
  const long long total = static_cast<long long>(ng) * nh;
  if (total > (1 << 22))
    throw_invalid("product with " + std::to_string(total) + " vertices is too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(product_edge_count(kind, g, h)));
  std::vector<Vertex> nbrs;
  for (Vertex gi = 0; gi < ng; ++gi) {
    for (Vertex hi = 0; hi < nh; ++hi) {
      const Vertex a = gi * nh + hi;
      nbrs.clear();
      const bool moves_h_alone = kind != ProductKind::kDirect;
      const bool moves_g_alone =
          kind == ProductKind::kCartesian || kind == ProductKind::kStrong;
      if (moves_h_alone)
        for (const auto &ih : h.incident(hi))
          nbrs.push_back(gi * nh + ih.neighbor);
      for (const auto &ig : g.incident(gi)) {
        const Vertex gj = ig.neighbor;
        if (moves_g_alone)
          nbrs.push_back(gj * nh + hi);
        if (kind == ProductKind::kLexicographic) {
          for (Vertex hj = 0; hj < nh; ++hj)
            nbrs.push_back(gj * nh + hj);
        } else if (kind != ProductKind::kCartesian) {
          for (const auto &ih : h.incident(hi))
            nbrs.push_back(gj * nh + ih.neighbor);
        }
      }
      std::sort(nbrs.begin(), nbrs.end());
      for (const Vertex b : nbrs)
        if (b > a)
          edges.push_back({a, b});
    }
  }
  return Graph(static_cast<int>(total), std::move(edges));
}

} // namespace

ProductGraph product(const Graph &g, const Graph &h, ProductKind kind) {
  ProductGraph p;
  p.graph = build_product_graph(g, h, kind);
  p.kind = kind;
  p.factor_g = g;
  p.factor_h = h;
  return p;
}

ProductGraph product(std::shared_ptr<const ProductGraph> g, const Graph &h, ProductKind kind) {
  ProductGraph p = product(g->graph, h, kind);
  p.left_product = std::move(g);
  return p;
}

EdgeProjection project_edge(const ProductGraph &p, EdgeId e) {
  const auto [a, b] = p.graph.edge(e);
  const auto [ga, ha] = p.pair_of(a);
  const auto [gb, hb] = p.pair_of(b);
  EdgeProjection out;
  out.g_moves = ga != gb;
  out.h_moves = ha != hb;
  if (out.g_moves)
    out.g_edge = p.factor_g.edge_between(ga, gb);
  if (out.h_moves)
    out.h_edge = p.factor_h.edge_between(ha, hb);
  return out;
}

// ---------------------------------------------------------------------------
// distances

namespace {

Distance add(Distance a, Distance b) {
  if (!a || !b)
    return kUnreachable;
  return *a + *b;
}

Distance max_of(Distance a, Distance b) {
  if (!a || !b)
    return kUnreachable;
  return std::max(*a, *b);
}

Distance min_of(Distance a, Distance b) {
  if (!a)
    return b;
  if (!b)
    return a;
  return std::min(*a, *b);
}

Distance predict(ProductKind kind, std::pair<Vertex, Vertex> from, std::pair<Vertex, Vertex> to,
                 Distance dg, Distance dh, ParityDistances pg, ParityDistances ph, int deg_g,
                 int deg_h) {
  const auto [g, h] = from;
  const auto [g2, h2] = to;
  switch (kind) {
  case ProductKind::kCartesian:
    return add(dg, dh);
  case ProductKind::kStrong:
    return max_of(dg, dh);
  case ProductKind::kLexicographic:
    if (g != g2)
      return dg;
    if (deg_g == 0)
      return dh;
    return min_of(dh, 2);
  case ProductKind::kDirect:
    if (from == to)
      return 0;
    // A walk can only be padded by back-and-forth steps when its start has an
    // edge; an isolated coordinate admits the empty walk alone.
    if (deg_g == 0 || deg_h == 0)
      return kUnreachable;
    return min_of(max_of(pg.even, ph.even), max_of(pg.odd, ph.odd));
  }
  (void)h;
  (void)h2;
  return kUnreachable;
}

} // namespace

Distance predicted_distance(ProductKind kind, const Graph &g, const Graph &h,
                            std::pair<Vertex, Vertex> from, std::pair<Vertex, Vertex> to) {
  const Distance dg = distance(g, from.first, to.first);
  const Distance dh = distance(h, from.second, to.second);
  ParityDistances pg, ph;
  if (kind == ProductKind::kDirect) {
    pg = parity_distances(g, from.first, to.first);
    ph = parity_distances(h, from.second, to.second);
  }
  return predict(kind, from, to, dg, dh, pg, ph, g.degree(from.first), h.degree(from.second));
}

DistancePredictor::DistancePredictor(ProductKind kind, const Graph &g, const Graph &h)
    : kind_(kind) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    dist_g_.push_back(bfs_distances(g, v));
    parity_g_.push_back(parity_distances_from(g, v));
    degree_g_.push_back(g.degree(v));
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    dist_h_.push_back(bfs_distances(h, v));
    parity_h_.push_back(parity_distances_from(h, v));
    degree_h_.push_back(h.degree(v));
  }
}

Distance DistancePredictor::operator()(std::pair<Vertex, Vertex> from,
                                       std::pair<Vertex, Vertex> to) const {
  const auto gi = static_cast<std::size_t>(from.first);
  const auto gj = static_cast<std::size_t>(to.first);
  const auto hi = static_cast<std::size_t>(from.second);
  const auto hj = static_cast<std::size_t>(to.second);
  return predict(kind_, from, to, dist_g_[gi][gj], dist_h_[hi][hj], parity_g_[gi][gj],
                 parity_h_[hi][hj], degree_g_[gi], degree_h_[hi]);
}

bool direct_is_connected(const Graph &g, const Graph &h) {
  if (!is_connected(g) || !is_connected(h))
    return false;
  // K1 x K1 is a single vertex; K1 x H with H nontrivial has no edges
  if (g.vertex_count() * h.vertex_count() == 1)
    return true;
  if (g.vertex_count() == 1 || h.vertex_count() == 1)
    return false;
  return !is_bipartite(g).valid || !is_bipartite(h).valid;
}

DoubleCoverSplit bipartite_double_cover_split(const Graph &b) {
  const auto parts = is_bipartite(b);
  if (!parts.valid)
    throw_invalid("double cover split needs a bipartite graph");
  if (!is_connected(b))
    throw_invalid("double cover split needs a connected graph");
  DoubleCoverSplit split;
  // vertex (x, k) of B x K2 has index 2x + k
  for (Vertex x = 0; x < b.vertex_count(); ++x) {
    const int s = parts.side[static_cast<std::size_t>(x)];
    split.first.push_back(2 * x + s);
    split.second.push_back(2 * x + (1 - s));
  }
  return split;
}

// ---------------------------------------------------------------------------
// topologies

const std::vector<std::string_view> &topology_names() {
  static const std::vector<std::string_view> names = {
      "grid", "mesh", "lex-mesh", "torus", "lex-torus", "ghc", "lex-ghc",
      "hyper-petersen", "lex-hyper-petersen"};
  return names;
}

namespace {

std::string joined(const std::vector<int> &params) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i ? "," : "") + std::to_string(params[i]);
  return s;
}

ProductGraph fold(const std::vector<Graph> &factors, ProductKind kind) {
  if (factors.size() == 1)
    return product(make_complete(1), factors.front(), kind);
  auto acc = std::make_shared<const ProductGraph>(product(factors[0], factors[1], kind));
  for (std::size_t i = 2; i < factors.size(); ++i)
    acc = std::make_shared<const ProductGraph>(product(acc, factors[i], kind));
  return *acc;
}

} // namespace

ProductGraph build_topology(std::string_view name, const std::vector<int> &params) {
  const std::string family(name);
  auto fail = [&](const std::string &why) -> ProductGraph {
    throw_invalid("topology " + family + " [" + joined(params) + "]: " + why);
  };
  auto need_all = [&](int minimum, const char *what) {
    if (params.empty())
      fail("needs at least one size");
    for (const int p : params)
      if (p < minimum)
        fail(std::string(what) + " sizes must be >= " + std::to_string(minimum));
  };
  auto factors_of = [&](Graph (*make)(int)) {
    std::vector<Graph> fs;
    for (const int p : params)
      fs.push_back(make(p));
    return fs;
  };

  if (name == "grid") {
    if (params.size() != 2)
      fail("grid takes exactly two path sizes");
    need_all(2, "path");
    return fold(factors_of(make_path), ProductKind::kCartesian);
  }
  if (name == "mesh" || name == "lex-mesh") {
    need_all(2, "path");
    return fold(factors_of(make_path),
                name == "mesh" ? ProductKind::kCartesian : ProductKind::kLexicographic);
  }
  if (name == "torus" || name == "lex-torus") {
    need_all(3, "ring");
    return fold(factors_of(make_cycle),
                name == "torus" ? ProductKind::kCartesian : ProductKind::kLexicographic);
  }
  if (name == "ghc" || name == "lex-ghc") {
    need_all(2, "clique");
    return fold(factors_of(make_complete),
                name == "ghc" ? ProductKind::kCartesian : ProductKind::kLexicographic);
  }
  const bool hp = name == "hyper-petersen" || name == "hp";
  const bool hl = name == "lex-hyper-petersen" || name == "hl";
  if (hp || hl) {
    if (params.size() != 1)
      fail("takes exactly one dimension n");
    if (params[0] < 3)
      fail("dimension n must be >= 3");
    if (params[0] > 15)
      fail("dimension n must be <= 15");
    return product(make_hypercube(params[0] - 3), make_petersen(),
                   hp ? ProductKind::kCartesian : ProductKind::kLexicographic);
  }
  return fail("unknown topology name");
}

} // namespace pcprod
