#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "pcprod/constructive.hpp"
#include "pcprod/error.hpp"
#include "pcprod/solver.hpp"

namespace pcprod {

namespace {

struct Candidate {
  EdgeColoring coloring;
  std::string source;
};

bool recoverable(const Error &e) {
  return e.kind() == ErrorKind::kResourceExceeded || e.kind() == ErrorKind::kSearchBudgetExceeded;
}

// Coloring of `target` induced by a coloring of an isomorphic graph through
// a vertex map.
template <typename VertexMap>
EdgeColoring transport(const Graph &target, const Graph &source, const EdgeColoring &c,
                       VertexMap to_source) {
  EdgeColoring out;
  out.palette_size = c.palette_size;
  for (const auto &[a, b] : target.edges()) {
    const auto e = source.edge_between(to_source(a), to_source(b));
    if (!e)
      throw_invalid("coloring transport: edge has no image");
    out.colors.push_back(c[*e]);
  }
  return out;
}

std::optional<Candidate> construct(const ProductGraph &p, const SolverOptions &options);

// Best proper-path coloring we can certify cheaply for a factor.
std::optional<EdgeColoring> factor_coloring(const Graph &f,
                                            const std::shared_ptr<const ProductGraph> &as_product,
                                            const SolverOptions &options) {
  if (f.vertex_count() < 2 || !is_connected(f))
    return std::nullopt;
  // bounds must stay cheap: only small factors are solved exactly
  SolverOptions small = options;
  small.max_colorings = std::min<std::uint64_t>(options.max_colorings, 200'000);
  small.max_edges_small_palette = std::min(options.max_edges_small_palette, 24);
  try {
    return pc_exact(f, f.edge_count(), small).certificate;
  } catch (const Error &e) {
    if (!recoverable(e))
      throw;
  }
  if (as_product)
    if (auto c = construct(*as_product, options))
      return c->coloring;
  return greedy_proper_edge_coloring(f);
}

ProductGraph swapped(const ProductGraph &p) { return product(p.factor_h, p.factor_g, p.kind); }

EdgeColoring from_swapped(const ProductGraph &p, const ProductGraph &q, const EdgeColoring &c) {
  return transport(p.graph, q.graph, c, [&](Vertex v) {
    const auto [g, h] = p.pair_of(v);
    return q.index_of(h, g);
  });
}

std::optional<Candidate> construct(const ProductGraph &p, const SolverOptions &options) {
  if (p.kind == ProductKind::kDirect && (p.n_g() == 1 || p.n_h() == 1))
    return std::nullopt;
  // a trivial factor leaves a copy of the other one
  if (p.n_g() == 1) {
    auto c = factor_coloring(p.factor_h, nullptr, options);
    if (!c)
      return std::nullopt;
    return Candidate{transport(p.graph, p.factor_h, *c, [&](Vertex v) { return p.pair_of(v).second; }),
                     "factor"};
  }
  if (p.n_h() == 1) {
    auto c = factor_coloring(p.factor_g, p.left_product, options);
    if (!c)
      return std::nullopt;
    return Candidate{transport(p.graph, p.factor_g, *c, [&](Vertex v) { return p.pair_of(v).first; }),
                     "factor"};
  }
  if (!is_connected(p.factor_g) || !is_connected(p.factor_h))
    return std::nullopt;

  const auto c_g = factor_coloring(p.factor_g, p.left_product, options);
  const auto c_h = factor_coloring(p.factor_h, nullptr, options);
  if (!c_g || !c_h)
    return std::nullopt;

  try {
    switch (p.kind) {
    case ProductKind::kCartesian:
    case ProductKind::kStrong: {
      auto scheme = p.kind == ProductKind::kCartesian ? color_cartesian : color_strong;
      if (c_h->palette_size <= c_g->palette_size)
        return Candidate{scheme(p, *c_h, options.check).coloring, std::string(to_string(p.kind))};
      const auto q = swapped(p);
      return Candidate{from_swapped(p, q, scheme(q, *c_g, options.check).coloring),
                       std::string(to_string(p.kind))};
    }
    case ProductKind::kLexicographic: {
      auto r = color_lexicographic(p, *c_g, *c_h, options.check);
      return Candidate{std::move(r.coloring), "lex/" + r.case_tag};
    }
    case ProductKind::kDirect: {
      std::optional<Candidate> best;
      auto offer = [&](EdgeColoring c) {
        if (!best || c.palette_size < best->coloring.palette_size)
          best = Candidate{std::move(c), "direct"};
      };
      if (!is_bipartite(p.factor_g).valid)
        offer(color_direct(p, *c_h, decomposition_coloring(p.factor_g, options), options.check)
                  .coloring);
      if (!is_bipartite(p.factor_h).valid) {
        const auto q = swapped(p);
        offer(from_swapped(
            p, q,
            color_direct(q, *c_g, decomposition_coloring(p.factor_h, options), options.check)
                .coloring));
      }
      return best;
    }
    }
  } catch (const Error &e) {
    if (!recoverable(e))
      throw;
  }
  return std::nullopt;
}

} // namespace

PcBounds pc_bounds(const Graph &g, const ProductGraph *hints, const SolverOptions &options) {
  if (!is_connected(g))
    throw_invalid("pc_bounds needs a connected graph");
  PcBounds out;
  if (g.vertex_count() <= 1)
    return out;
  out.lower = g.is_complete() ? 1 : 2;
  if (g.is_complete()) {
    out.upper = 1;
    out.upper_source = "complete";
    out.upper_coloring = monochrome(g);
    return out;
  }
  auto greedy = greedy_proper_edge_coloring(g);
  out.upper = greedy.palette_size;
  out.upper_source = "greedy";
  out.upper_coloring = std::move(greedy);

  if (hints) {
    if (!(hints->graph == g))
      throw_invalid("product metadata does not describe this graph");
    if (auto cand = construct(*hints, options);
        cand && cand->coloring.palette_size < out.upper) {
      bool verified = false;
      try {
        verified = is_proper_connected(g, cand->coloring, options.check).connected;
      } catch (const Error &e) {
        if (!recoverable(e))
          throw;
      }
      if (verified) {
        out.upper = cand->coloring.palette_size;
        out.upper_source = cand->source;
        out.upper_coloring = std::move(cand->coloring);
      }
    }
  }
  out.upper = std::max(out.upper, out.lower);
  return out;
}

} // namespace pcprod
