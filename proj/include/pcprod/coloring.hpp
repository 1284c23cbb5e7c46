#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcprod/graph.hpp"

namespace pcprod {

using Color = int;

// Colors are 1..palette_size, one per edge index.
struct EdgeColoring {
  std::vector<Color> colors;
  int palette_size = 0;

  Color operator[](EdgeId e) const { return colors[static_cast<std::size_t>(e)]; }
  // Number of distinct colors actually used.
  int used_colors() const;
};

// Throws kInvalidParameter if c does not color exactly the edges of g with
// colors in 1..palette_size.
void validate_coloring(const Graph &g, const EdgeColoring &c);
EdgeColoring monochrome(const Graph &g);
EdgeColoring rainbow(const Graph &g);

enum class Parity { kEven, kOdd };

struct SearchOptions {
  // Backtracking nodes allowed per vertex pair before giving up.
  std::uint64_t node_budget = 10'000'000;
  // 1 selects the serial reference; anything else the OpenMP kernel
  // (0 = runtime default thread count).
  int jobs = 1;
};

struct ConnectivityReport {
  bool connected = true;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  long long pairs_checked = 0;
};

// Walk relaxation: consecutive edges differ in color, vertices may repeat.
bool proper_walk_exists(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                        std::optional<Parity> parity = std::nullopt);

// Bit 0: a proper even walk from the source reaches v; bit 1: an odd one.
std::vector<std::uint8_t> proper_walk_parities_from(const Graph &g, const EdgeColoring &c,
                                                    Vertex source);

// Exact proper simple path search. Throws kSearchBudgetExceeded when the
// backtracking exceeds options.node_budget.
bool proper_path_exists(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                        const SearchOptions &options = {});

// Proper path of the given length parity. For u == v the even case is the
// empty path and the odd case asks for a properly colored odd cycle through u
// (its first and last edges also differ).
bool proper_path_with_parity_exists(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                                    Parity parity, const SearchOptions &options = {});

// Every pair of distinct vertices joined by a proper path. The failing pair
// is the lexicographically smallest (u < v) failure; pairs_checked counts
// pairs up to and including it.
ConnectivityReport is_proper_connected(const Graph &g, const EdgeColoring &c,
                                       const SearchOptions &options = {});
ConnectivityReport is_proper_connected_serial(const Graph &g, const EdgeColoring &c,
                                              const SearchOptions &options = {});
ConnectivityReport is_proper_connected_parallel(const Graph &g, const EdgeColoring &c,
                                                const SearchOptions &options = {});

// Every ordered pair (u, v), u == v included, joined by proper paths of both
// parities. Paths reverse, so unordered pairs u <= v are checked.
ConnectivityReport is_odd_even_proper(const Graph &g, const EdgeColoring &c,
                                      const SearchOptions &options = {});
ConnectivityReport is_odd_even_proper_serial(const Graph &g, const EdgeColoring &c,
                                             const SearchOptions &options = {});
ConnectivityReport is_odd_even_proper_parallel(const Graph &g, const EdgeColoring &c,
                                               const SearchOptions &options = {});

bool is_proper_edge_coloring(const Graph &g, const EdgeColoring &c);
// First-fit in edge index order; at most 2*maxdeg - 1 colors.
EdgeColoring greedy_proper_edge_coloring(const Graph &g);

namespace detail {

enum class PairOutcome : std::uint8_t { kOk, kFail, kBudget };

// One all-pairs kernel shared by the serial and OpenMP drivers.
struct PairCheck {
  const Graph &g;
  const EdgeColoring &c;
  SearchOptions options;
  bool odd_even = false;

  std::vector<std::pair<Vertex, Vertex>> pairs() const;
  PairOutcome check(Vertex u, Vertex v, const std::vector<std::uint8_t> &walk_row) const;
};

ConnectivityReport finish_report(const std::vector<std::pair<Vertex, Vertex>> &pairs,
                                 std::size_t first_bad, PairOutcome outcome);

} // namespace detail

} // namespace pcprod
