#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcprod/coloring.hpp"
#include "pcprod/graph.hpp"
#include "pcprod/products.hpp"

namespace pcprod {

enum class Method { kExhaustive, kConstructive, kBoundOnly };
enum class Quantity { kPc, kOepc };

std::string_view to_string(Method m);
std::string_view to_string(Quantity q);

// value == nullopt means infinite (oepc of a graph with no odd-even proper
// coloring).
struct PcCertificate {
  std::optional<int> value;
  std::optional<EdgeColoring> certificate;
  Method method = Method::kExhaustive;
  Quantity quantity = Quantity::kPc;

  bool infinite() const { return !value.has_value(); }
};

struct SolverOptions {
  // Exhaustive search is refused above these edge counts.
  int max_edges = 14;                  // palettes of 3 or more colors
  int max_edges_small_palette = 40;    // 1- and 2-color trials
  std::uint64_t max_colorings = 50'000'000; // complete colorings checked per palette size
  // Workers for the coloring search; 1 runs the serial reference.
  int jobs = 1;
  // Per-pair limits of the path checker used on every candidate.
  SearchOptions check;
  // A coloring known to be proper-path connected (e.g. a construction). Its
  // palette caps the search; if it meets the lower bound no search runs.
  std::optional<EdgeColoring> hint;
};

// Smallest k <= k_max admitting a proper-path coloring. Candidate colorings
// are enumerated with edge 0 fixed to color 1 and color c+1 first appearing
// after color c. Throws kInvalidParameter for disconnected input and
// kResourceExceeded when the search would exceed its limits or pc > k_max.
PcCertificate pc_exact(const Graph &g, int k_max, const SolverOptions &options = {});
PcCertificate pc_exact_serial(const Graph &g, int k_max, const SolverOptions &options = {});
PcCertificate pc_exact_parallel(const Graph &g, int k_max, const SolverOptions &options = {});

// Same for odd-even proper colorings; infinite for bipartite graphs and for
// graphs whose rainbow coloring already fails.
PcCertificate oepc_exact(const Graph &g, int k_max, const SolverOptions &options = {});

// Unpruned enumeration of every coloring with colors 1..k (test reference).
std::optional<EdgeColoring> find_proper_coloring_unpruned(const Graph &g, int k,
                                                          const SearchOptions &check = {});

struct OddCycleDecomposition {
  std::vector<EdgeId> odd_edges;         // E(O^G): edges on some odd cycle
  std::vector<EdgeId> bridge_like_edges; // E(B^G): the rest
  std::vector<Subgraph> o_components;
  std::vector<Subgraph> b_components;
};

OddCycleDecomposition odd_cycle_decomposition(const Graph &g);

// Brute force: does some simple cycle through e have odd length? |V| <= 10.
bool edge_on_odd_cycle_oracle(const Graph &g, EdgeId e);

// Optimal colorings of every O- and B-component merged into one coloring of
// G with disjoint palettes: O-components first, then B-components.
struct DecompositionColoring {
  OddCycleDecomposition decomposition;
  EdgeColoring coloring;
  int o_value = 0;
  int b_value = 0;
};

DecompositionColoring decomposition_coloring(const Graph &g, const SolverOptions &options = {});
int o_value(const Graph &g, const SolverOptions &options = {});
int b_value(const Graph &g, const SolverOptions &options = {});

struct PcBounds {
  int lower = 0;
  int upper = 0;
  std::string upper_source; // "greedy" or the construction scheme
  std::optional<EdgeColoring> upper_coloring;
};

// lower: 1 for complete graphs (upper 1 too), else 2. upper: the greedy proper edge
// coloring, improved by the product construction when product metadata is
// given. Every upper coloring is verified before it is used.
PcBounds pc_bounds(const Graph &g, const ProductGraph *hints = nullptr,
                   const SolverOptions &options = {});

} // namespace pcprod
