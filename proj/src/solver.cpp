#include "pcprod/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <string>

#include "pcprod/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcprod {

std::string_view to_string(Method m) {
  switch (m) {
  case Method::kExhaustive:
    return "exhaustive";
  case Method::kConstructive:
    return "constructive";
  case Method::kBoundOnly:
    return "bound-only";
  }
  return "?";
}

std::string_view to_string(Quantity q) { return q == Quantity::kPc ? "pc" : "oepc"; }

namespace {

// Accepts or rejects one complete coloring. Remembers the last failing pair
// and tries it first; most rejected candidates fail on the same pair.
class Acceptor {
public:
  Acceptor(const Graph &g, Quantity quantity, const SearchOptions &check)
      : g_(g), quantity_(quantity), check_(check) {
    check_.jobs = 1;
  }

  bool operator()(const EdgeColoring &c) {
    if (last_fail_) {
      const auto [u, v] = *last_fail_;
      if (!pair_ok(c, u, v))
        return false;
    }
    const auto report = quantity_ == Quantity::kPc ? is_proper_connected_serial(g_, c, check_)
                                                   : is_odd_even_proper_serial(g_, c, check_);
    if (!report.connected)
      last_fail_ = report.failing_pair;
    return report.connected;
  }

private:
  bool pair_ok(const EdgeColoring &c, Vertex u, Vertex v) const {
    if (quantity_ == Quantity::kPc)
      return proper_path_exists(g_, c, u, v, check_);
    return proper_path_with_parity_exists(g_, c, u, v, Parity::kOdd, check_) &&
           proper_path_with_parity_exists(g_, c, u, v, Parity::kEven, check_);
  }

  const Graph &g_;
  Quantity quantity_;
  SearchOptions check_;
  std::optional<std::pair<Vertex, Vertex>> last_fail_;
};

struct SearchShared {
  std::uint64_t max_leaves;
  std::atomic<std::uint64_t> leaves{0};
  // index of the earliest subtree known to contain a solution
  std::atomic<long long> best{std::numeric_limits<long long>::max()};
};

// Depth-first enumeration of canonical colorings with exactly k colors.
class ColoringSearch {
public:
  ColoringSearch(const Graph &g, int k, Quantity quantity, const SearchOptions &check,
                 SearchShared &shared, long long subtree)
      : g_(g), m_(g.edge_count()), k_(k), accept_(g, quantity, check), shared_(shared),
        subtree_(subtree) {
    coloring_.colors.assign(static_cast<std::size_t>(m_), 1);
    coloring_.palette_size = k;
  }

  // Colors edges [from, m) given that edges before `from` are already set.
  bool run(const std::vector<Color> &prefix) {
    std::copy(prefix.begin(), prefix.end(), coloring_.colors.begin());
    int used = 0;
    for (const Color c : prefix)
      used = std::max(used, c);
    return extend(static_cast<int>(prefix.size()), used);
  }

  const EdgeColoring &coloring() const { return coloring_; }

private:
  bool extend(int edge, int used) {
    if (shared_.best.load(std::memory_order_relaxed) < subtree_)
      return false;
    if (used + (m_ - edge) < k_)
      return false;
    if (edge == m_) {
      if (shared_.leaves.fetch_add(1, std::memory_order_relaxed) >= shared_.max_leaves)
        throw Error(ErrorKind::kResourceExceeded,
                    "coloring search exceeded " + std::to_string(shared_.max_leaves) +
                        " candidate colorings at palette " + std::to_string(k_));
      return accept_(coloring_);
    }
    const int top = std::min(k_, used + 1);
    for (Color c = 1; c <= top; ++c) {
      coloring_.colors[static_cast<std::size_t>(edge)] = c;
      if (extend(edge + 1, std::max(used, c)))
        return true;
    }
    return false;
  }

  const Graph &g_;
  int m_;
  int k_;
  Acceptor accept_;
  SearchShared &shared_;
  long long subtree_;
  EdgeColoring coloring_;
};

std::optional<EdgeColoring> search_serial(const Graph &g, int k, Quantity quantity,
                                          const SolverOptions &options) {
  if (g.edge_count() == 0)
    return std::nullopt;
  SearchShared shared{options.max_colorings};
  ColoringSearch search(g, k, quantity, options.check, shared, 0);
  if (search.run({1}))
    return search.coloring();
  return std::nullopt;
}

// Canonical prefixes of the first `depth` edges in enumeration order.
std::vector<std::vector<Color>> prefixes(int depth, int k) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> cur{1};
  std::function<void(int)> rec = [&](int used) {
    if (static_cast<int>(cur.size()) == depth) {
      out.push_back(cur);
      return;
    }
    for (Color c = 1; c <= std::min(k, used + 1); ++c) {
      cur.push_back(c);
      rec(std::max(used, c));
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::optional<EdgeColoring> search_parallel(const Graph &g, int k, Quantity quantity,
                                            const SolverOptions &options) {
  if (g.edge_count() == 0)
    return std::nullopt;
#ifdef _OPENMP
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#else
  const int threads = 1;
#endif
  int depth = 1;
  while (depth < g.edge_count() && prefixes(depth, k).size() < 8u * static_cast<unsigned>(threads))
    ++depth;
  const auto work = prefixes(depth, k);
  const auto count = static_cast<long long>(work.size());

  SearchShared shared{options.max_colorings};
  std::vector<std::optional<EdgeColoring>> found(work.size());
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    if (i > shared.best.load(std::memory_order_relaxed) || error)
      continue;
    try {
      ColoringSearch search(g, k, quantity, options.check, shared, i);
      if (search.run(work[static_cast<std::size_t>(i)])) {
        found[static_cast<std::size_t>(i)] = search.coloring();
        long long seen = shared.best.load();
        while (i < seen && !shared.best.compare_exchange_weak(seen, i)) {
        }
      }
    } catch (...) {
#pragma omp critical(pcprod_search_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
  const long long best = shared.best.load();
  if (best >= count)
    return std::nullopt;
  return found[static_cast<std::size_t>(best)];
}

void require_connected(const Graph &g, const char *what) {
  if (!is_connected(g))
    throw_invalid(std::string(what) + " needs a connected graph");
}

void check_search_size(const Graph &g, int k, const SolverOptions &options) {
  const int limit = k <= 2 ? options.max_edges_small_palette : options.max_edges;
  if (g.edge_count() > limit)
    throw Error(ErrorKind::kResourceExceeded,
                "graph has " + std::to_string(g.edge_count()) +
                    " edges; exhaustive search at palette " + std::to_string(k) +
                    " is limited to " + std::to_string(limit));
}

bool accepts(const Graph &g, const EdgeColoring &c, Quantity quantity,
             const SearchOptions &check) {
  try {
    const auto report =
        quantity == Quantity::kPc ? is_proper_connected(g, c, check) : is_odd_even_proper(g, c, check);
    return report.connected;
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kSearchBudgetExceeded)
      return false;
    throw;
  }
}

// Shared driver: try every k in [lower, upper) exhaustively; `upper` comes
// with a verified certificate.
PcCertificate solve(const Graph &g, int k_max, Quantity quantity, int lower, int upper,
                    EdgeColoring upper_coloring, Method upper_method,
                    const SolverOptions &options, bool parallel) {
  PcCertificate out;
  out.quantity = quantity;
  const int stop = std::min(upper - 1, k_max);
  for (int k = lower; k <= stop; ++k) {
    check_search_size(g, k, options);
    auto found = parallel ? search_parallel(g, k, quantity, options)
                          : search_serial(g, k, quantity, options);
    if (found) {
      out.value = k;
      out.certificate = std::move(found);
      out.method = Method::kExhaustive;
      return out;
    }
  }
  if (upper > k_max)
    throw Error(ErrorKind::kResourceExceeded,
                std::string(to_string(quantity)) + " exceeds k_max = " + std::to_string(k_max));
  upper_coloring.palette_size = upper;
  out.value = upper;
  out.certificate = std::move(upper_coloring);
  // the certificate alone settles the value when it meets the lower bound
  out.method = upper == lower ? upper_method : Method::kExhaustive;
  return out;
}

PcCertificate pc_exact_impl(const Graph &g, int k_max, const SolverOptions &options,
                            bool parallel) {
  require_connected(g, "pc_exact");
  if (g.vertex_count() <= 1) {
    PcCertificate trivial;
    trivial.value = 0;
    trivial.certificate = EdgeColoring{};
    return trivial;
  }
  const int lower = g.is_complete() ? 1 : 2;
  // a proper edge coloring makes every path proper
  EdgeColoring best = greedy_proper_edge_coloring(g);
  Method best_method = Method::kConstructive;
  if (options.hint && options.hint->palette_size < best.palette_size) {
    validate_coloring(g, *options.hint);
    if (accepts(g, *options.hint, Quantity::kPc, options.check))
      best = *options.hint;
  }
  const int upper = std::max(lower, best.palette_size);
  return solve(g, k_max, Quantity::kPc, lower, upper, std::move(best), best_method, options,
               parallel);
}

} // namespace

PcCertificate pc_exact_serial(const Graph &g, int k_max, const SolverOptions &options) {
  return pc_exact_impl(g, k_max, options, false);
}

PcCertificate pc_exact_parallel(const Graph &g, int k_max, const SolverOptions &options) {
  return pc_exact_impl(g, k_max, options, true);
}

PcCertificate pc_exact(const Graph &g, int k_max, const SolverOptions &options) {
  return options.jobs == 1 ? pc_exact_serial(g, k_max, options)
                           : pc_exact_parallel(g, k_max, options);
}

PcCertificate oepc_exact(const Graph &g, int k_max, const SolverOptions &options) {
  require_connected(g, "oepc_exact");
  PcCertificate out;
  out.quantity = Quantity::kOepc;
  if (is_bipartite(g).valid)
    return out;
  // Under a proper edge coloring every path and cycle is proper, so the
  // value is finite iff the structure alone (rainbow) already works.
  EdgeColoring proper = greedy_proper_edge_coloring(g);
  if (!accepts(g, proper, Quantity::kOepc, options.check))
    return out;
  // a properly colored odd cycle needs three colors
  const int lower = 3;
  const int upper = std::max(lower, proper.palette_size);
  return solve(g, k_max, Quantity::kOepc, lower, upper, std::move(proper),
               Method::kConstructive, options, options.jobs != 1);
}

std::optional<EdgeColoring> find_proper_coloring_unpruned(const Graph &g, int k,
                                                          const SearchOptions &check) {
  const int m = g.edge_count();
  EdgeColoring c{std::vector<Color>(static_cast<std::size_t>(m), 1), k};
  while (true) {
    if (is_proper_connected_serial(g, c, check).connected)
      return c;
    int i = m - 1;
    while (i >= 0 && c.colors[static_cast<std::size_t>(i)] == k)
      c.colors[static_cast<std::size_t>(i--)] = 1;
    if (i < 0)
      return std::nullopt;
    ++c.colors[static_cast<std::size_t>(i)];
  }
}

// ---------------------------------------------------------------------------
// odd-cycle decomposition

OddCycleDecomposition odd_cycle_decomposition(const Graph &g) {
  OddCycleDecomposition out;
  const auto bd = blocks(g);
  std::vector<bool> odd_block(bd.blocks.size(), false);
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (bd.blocks[b].size() < 3)
      continue;
    odd_block[b] = !is_bipartite(spanning_subgraph(g, bd.blocks[b])).valid;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto b = static_cast<std::size_t>(bd.block_of_edge[static_cast<std::size_t>(e)]);
    (odd_block[b] ? out.odd_edges : out.bridge_like_edges).push_back(e);
  }
  out.o_components = edge_components(g, out.odd_edges);
  out.b_components = edge_components(g, out.bridge_like_edges);
  return out;
}

bool edge_on_odd_cycle_oracle(const Graph &g, EdgeId e) {
  if (g.vertex_count() > 10)
    throw_invalid("odd-cycle oracle is limited to 10 vertices");
  const auto [u, v] = g.edge(e);
  // a simple v-u path avoiding e closes a cycle with e; odd cycle iff the
  // path has even length
  std::vector<std::uint8_t> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<bool(Vertex, int)> walk = [&](Vertex x, int length) {
    if (x == u)
      return length % 2 == 0;
    on_path[static_cast<std::size_t>(x)] = 1;
    for (const auto &inc : g.incident(x)) {
      if (inc.edge == e || on_path[static_cast<std::size_t>(inc.neighbor)])
        continue;
      if (walk(inc.neighbor, length + 1))
        return true;
    }
    on_path[static_cast<std::size_t>(x)] = 0;
    return false;
  };
  return walk(v, 0);
}

DecompositionColoring decomposition_coloring(const Graph &g, const SolverOptions &options) {
  DecompositionColoring out;
  out.decomposition = odd_cycle_decomposition(g);
  out.coloring.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
  int offset = 0;
  auto place = [&](const Subgraph &comp, const PcCertificate &cert) {
    if (cert.infinite())
      throw_invalid("component without an odd-even proper coloring");
    const auto &local = *cert.certificate;
    for (std::size_t le = 0; le < comp.edges.size(); ++le)
      out.coloring.colors[static_cast<std::size_t>(comp.edges[le])] = offset + local.colors[le];
    offset += *cert.value;
    return *cert.value;
  };
  for (const auto &comp : out.decomposition.o_components)
    out.o_value += place(comp, oepc_exact(comp.graph, comp.graph.edge_count() + 3, options));
  for (const auto &comp : out.decomposition.b_components)
    out.b_value += place(comp, pc_exact(comp.graph, comp.graph.edge_count(), options));
  out.coloring.palette_size = offset;
  return out;
}

int o_value(const Graph &g, const SolverOptions &options) {
  int total = 0;
  for (const auto &comp : odd_cycle_decomposition(g).o_components) {
    const auto cert = oepc_exact(comp.graph, comp.graph.edge_count() + 3, options);
    if (cert.infinite())
      throw_invalid("component without an odd-even proper coloring");
    total += *cert.value;
  }
  return total;
}

int b_value(const Graph &g, const SolverOptions &options) {
  int total = 0;
  for (const auto &comp : odd_cycle_decomposition(g).b_components)
    total += *pc_exact(comp.graph, comp.graph.edge_count(), options).value;
  return total;
}

} // namespace pcprod
