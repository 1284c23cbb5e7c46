#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcprod/graph.hpp"

namespace pcprod {

enum class ProductKind { kCartesian, kStrong, kLexicographic, kDirect };

// CLI-facing names: "cartesian", "strong", "lex", "direct".
std::string_view to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(std::string_view name);

// A product graph together with its factors. Vertex (g, h) has index
// g * n_h + h. When the left factor is itself a product (iterated products are
// left-associated) it is kept in left_product.
struct ProductGraph {
  Graph graph;
  ProductKind kind = ProductKind::kCartesian;
  Graph factor_g;
  Graph factor_h;
  std::shared_ptr<const ProductGraph> left_product;

  int n_g() const { return factor_g.vertex_count(); }
  int n_h() const { return factor_h.vertex_count(); }
  Vertex index_of(Vertex g, Vertex h) const { return g * n_h() + h; }
  std::pair<Vertex, Vertex> pair_of(Vertex index) const {
    return {index / n_h(), index % n_h()};
  }
};

ProductGraph product(const Graph &g, const Graph &h, ProductKind kind);
// Same, remembering that g is itself a product.
ProductGraph product(std::shared_ptr<const ProductGraph> g, const Graph &h, ProductKind kind);

// Factor edges an edge of the product moves along. Exactly the coordinates
// that change carry an edge index; lexicographic cross edges report the
// H-edge only when h and h' are adjacent in H.
struct EdgeProjection {
  std::optional<EdgeId> g_edge;
  std::optional<EdgeId> h_edge;
  bool g_moves = false;
  bool h_moves = false;
};
EdgeProjection project_edge(const ProductGraph &p, EdgeId e);

// Distance in the product predicted from factor data alone.
Distance predicted_distance(ProductKind kind, const Graph &g, const Graph &h,
                            std::pair<Vertex, Vertex> from, std::pair<Vertex, Vertex> to);

// Precomputes factor distance tables so all-pairs prediction is cheap.
class DistancePredictor {
public:
  DistancePredictor(ProductKind kind, const Graph &g, const Graph &h);
  Distance operator()(std::pair<Vertex, Vertex> from, std::pair<Vertex, Vertex> to) const;

private:
  ProductKind kind_;
  std::vector<std::vector<Distance>> dist_g_, dist_h_;
  std::vector<std::vector<ParityDistances>> parity_g_, parity_h_;
  std::vector<int> degree_g_, degree_h_;
};

bool direct_is_connected(const Graph &g, const Graph &h);

// Components of B x K2 for a connected bipartite B with parts X (side 0) and
// Y (side 1): first = {(x,0)} u {(y,1)}, second = {(x,1)} u {(y,0)}, each
// listed as product vertex indices ordered by the B-vertex they project to.
struct DoubleCoverSplit {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};
DoubleCoverSplit bipartite_double_cover_split(const Graph &b);

// Topology presets. Names: grid, mesh, lex-mesh, torus, lex-torus, ghc,
// lex-ghc, hyper-petersen (hp), lex-hyper-petersen (hl).
ProductGraph build_topology(std::string_view name, const std::vector<int> &params);
const std::vector<std::string_view> &topology_names();

// Expected edge count of a product from factor sizes.
long long product_edge_count(ProductKind kind, const Graph &g, const Graph &h);

} // namespace pcprod
