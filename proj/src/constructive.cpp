#include "pcprod/constructive.hpp"

#include <algorithm>
#include <string>

#include "pcprod/error.hpp"

namespace pcprod {

namespace {

void require_kind(const ProductGraph &p, ProductKind kind, const char *scheme) {
  if (p.kind != kind)
    throw_invalid(std::string(scheme) + " scheme needs a " + std::string(to_string(kind)) +
                  " product, got " + std::string(to_string(p.kind)));
}

void require_factor(const Graph &f, const char *name, const char *scheme) {
  if (f.vertex_count() < 2 || !is_connected(f))
    throw_invalid(std::string(scheme) + ": factor " + name +
                  " must be connected with at least 2 vertices");
}

void require_proper_path(const Graph &f, const EdgeColoring &c, const char *name,
                         const SearchOptions &check) {
  validate_coloring(f, c);
  if (!is_proper_connected(f, c, check).connected)
    throw_invalid(std::string("coloring of factor ") + name + " is not proper-path connected");
}

template <typename ColorOf>
EdgeColoring by_projection(const ProductGraph &p, int palette, ColorOf color_of) {
  EdgeColoring c;
  c.palette_size = palette;
  c.colors.reserve(static_cast<std::size_t>(p.graph.edge_count()));
  for (EdgeId e = 0; e < p.graph.edge_count(); ++e)
    c.colors.push_back(color_of(project_edge(p, e)));
  return c;
}

// Cartesian layer coloring of any product: the contributing factor's fibers
// copy its coloring, the other factor's fibers get the fresh color, and edges
// moving in both coordinates get color 1.
EdgeColoring layered(const ProductGraph &p, const EdgeColoring &contrib, bool h_contributes) {
  const int fresh = contrib.palette_size + 1;
  return by_projection(p, fresh, [&](const EdgeProjection &pr) {
    if (pr.g_moves && pr.h_moves)
      return 1;
    if (pr.h_moves)
      return h_contributes ? contrib[*pr.h_edge] : fresh;
    return h_contributes ? fresh : contrib[*pr.g_edge];
  });
}

} // namespace

ConstructionResult color_cartesian(const ProductGraph &p, const EdgeColoring &c_h,
                                   const SearchOptions &check) {
  require_kind(p, ProductKind::kCartesian, "cartesian");
  require_factor(p.factor_g, "G", "cartesian");
  require_factor(p.factor_h, "H", "cartesian");
  require_proper_path(p.factor_h, c_h, "H", check);
  return {layered(p, c_h, true), c_h.palette_size + 1, "cartesian", "h-contributes"};
}

ConstructionResult color_strong(const ProductGraph &p, const EdgeColoring &c_h,
                                const SearchOptions &check) {
  require_kind(p, ProductKind::kStrong, "strong");
  require_factor(p.factor_g, "G", "strong");
  require_factor(p.factor_h, "H", "strong");
  require_proper_path(p.factor_h, c_h, "H", check);
  return {layered(p, c_h, true), c_h.palette_size + 1, "strong", "cartesian-spanning"};
}

ConstructionResult color_lexicographic(const ProductGraph &p, const EdgeColoring &c_g,
                                       const EdgeColoring &c_h, const SearchOptions &check) {
  require_kind(p, ProductKind::kLexicographic, "lex");
  require_factor(p.factor_g, "G", "lex");
  require_factor(p.factor_h, "H", "lex");
  require_proper_path(p.factor_g, c_g, "G", check);
  require_proper_path(p.factor_h, c_h, "H", check);
  const int pc_g = c_g.palette_size;
  const int pc_h = c_h.palette_size;

  if (pc_g == 1 && pc_h == 1)
    return {monochrome(p.graph), 1, "lex", "iv"};
  if (pc_g == 1)
    return {layered(p, c_g, false), 2, "lex", "ii"};
  if (pc_h == 1)
    return {layered(p, c_h, true), 2, "lex", "iii"};

  if (pc_g > pc_h) {
    // cross edges are pinned to color 1, so some H-edge must avoid it
    EdgeColoring within = c_h;
    if (std::all_of(within.colors.begin(), within.colors.end(), [](Color c) { return c == 1; }))
      for (auto &c : within.colors)
        c = 2;
    auto c = by_projection(p, pc_h, [&](const EdgeProjection &pr) {
      return pr.g_moves ? 1 : within[*pr.h_edge];
    });
    return {std::move(c), pc_h, "lex", "i-gt"};
  }
  if (pc_g < pc_h)
    return {layered(p, c_g, false), pc_g + 1, "lex", "i-lt"};

  auto c = by_projection(p, std::max(pc_g, pc_h), [&](const EdgeProjection &pr) {
    return pr.g_moves ? c_g[*pr.g_edge] : c_h[*pr.h_edge];
  });
  return {std::move(c), pc_g, "lex", "i-eq"};
}

ConstructionResult color_direct(const ProductGraph &p, const EdgeColoring &c_h,
                                const DecompositionColoring &g_parts, const SearchOptions &check) {
  require_kind(p, ProductKind::kDirect, "direct");
  require_factor(p.factor_g, "G", "direct");
  require_factor(p.factor_h, "H", "direct");
  if (is_bipartite(p.factor_g).valid)
    throw_invalid("direct scheme needs a nonbipartite G; swap the factors or use direct-k2");
  require_proper_path(p.factor_h, c_h, "H", check);
  validate_coloring(p.factor_g, g_parts.coloring);

  const int k_h = c_h.palette_size;
  const int parts = g_parts.o_value + g_parts.b_value;
  auto c = by_projection(p, k_h * parts, [&](const EdgeProjection &pr) {
    return (g_parts.coloring[*pr.g_edge] - 1) * k_h + c_h[*pr.h_edge];
  });
  const bool h_bipartite = is_bipartite(p.factor_h).valid;
  return {std::move(c), k_h * parts, "direct", h_bipartite ? "h-bipartite" : "h-nonbipartite"};
}

ConstructionResult color_direct_k2(const ProductGraph &p, const DecompositionColoring &g_parts) {
  require_kind(p, ProductKind::kDirect, "direct-k2");
  require_factor(p.factor_g, "G", "direct-k2");
  if (p.factor_h.vertex_count() != 2 || p.factor_h.edge_count() != 1)
    throw_invalid("direct-k2 scheme needs K2 as the second factor");
  if (is_bipartite(p.factor_g).valid)
    throw_invalid("direct-k2 scheme needs a nonbipartite G");
  validate_coloring(p.factor_g, g_parts.coloring);

  EdgeColoring c;
  c.colors.assign(static_cast<std::size_t>(p.graph.edge_count()), 0);
  c.palette_size = g_parts.o_value + g_parts.b_value;

  // both lifts of every B-component carry that component's coloring
  for (const auto &comp : g_parts.decomposition.b_components) {
    const auto split = bipartite_double_cover_split(comp.graph);
    for (const auto *lift : {&split.first, &split.second}) {
      auto host = [&](Vertex x) {
        const Vertex local = (*lift)[static_cast<std::size_t>(x)];
        return p.index_of(comp.vertices[static_cast<std::size_t>(x)], local % 2);
      };
      for (EdgeId le = 0; le < comp.graph.edge_count(); ++le) {
        const auto [x, y] = comp.graph.edge(le);
        const auto e = p.graph.edge_between(host(x), host(y));
        if (!e)
          throw_invalid("double-cover lift edge missing from the product");
        c.colors[static_cast<std::size_t>(*e)] =
            g_parts.coloring[comp.edges[static_cast<std::size_t>(le)]];
      }
    }
  }
  for (EdgeId e = 0; e < p.graph.edge_count(); ++e) {
    auto &col = c.colors[static_cast<std::size_t>(e)];
    if (col == 0)
      col = g_parts.coloring[*project_edge(p, e).g_edge];
  }
  const int palette = c.palette_size;
  return {std::move(c), palette, "direct-k2", "double-cover"};
}

} // namespace pcprod
