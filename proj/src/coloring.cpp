#include "pcprod/coloring.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pcprod/error.hpp"

namespace pcprod {

int EdgeColoring::used_colors() const {
  std::vector<Color> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

void validate_coloring(const Graph &g, const EdgeColoring &c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count())
    throw_invalid("coloring has " + std::to_string(c.colors.size()) + " entries but graph has " +
                  std::to_string(g.edge_count()) + " edges");
  if (g.edge_count() > 0 && c.palette_size < 1)
    throw_invalid("palette size must be >= 1");
  for (std::size_t i = 0; i < c.colors.size(); ++i)
    if (c.colors[i] < 1 || c.colors[i] > c.palette_size)
      throw_invalid("edge " + std::to_string(i) + " has color " + std::to_string(c.colors[i]) +
                    " outside 1.." + std::to_string(c.palette_size));
}

EdgeColoring monochrome(const Graph &g) {
  return {std::vector<Color>(static_cast<std::size_t>(g.edge_count()), 1), 1};
}

EdgeColoring rainbow(const Graph &g) {
  EdgeColoring c;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    c.colors.push_back(e + 1);
  c.palette_size = std::max(1, g.edge_count());
  return c;
}

// ---------------------------------------------------------------------------
// walks

std::vector<std::uint8_t> proper_walk_parities_from(const Graph &g, const EdgeColoring &c,
                                                    Vertex source) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto colors = static_cast<std::size_t>(c.palette_size) + 1; // 0 = no edge yet
  // state = ((vertex * colors) + last_color) * 2 + parity
  std::vector<std::uint8_t> seen(n * colors * 2, 0);
  std::vector<std::uint8_t> reach(n, 0);
  std::deque<std::size_t> queue;
  const auto start = static_cast<std::size_t>(source) * colors * 2;
  seen[start] = 1;
  queue.push_back(start);
  reach[static_cast<std::size_t>(source)] = 1;
  while (!queue.empty()) {
    const auto state = queue.front();
    queue.pop_front();
    const auto parity = state % 2;
    const auto last = static_cast<Color>((state / 2) % colors);
    const auto x = static_cast<Vertex>(state / 2 / colors);
    for (const auto &inc : g.incident(x)) {
      const Color col = c[inc.edge];
      if (col == last)
        continue;
      const auto next =
          (static_cast<std::size_t>(inc.neighbor) * colors + static_cast<std::size_t>(col)) * 2 +
          (1 - parity);
      if (!seen[next]) {
        seen[next] = 1;
        reach[static_cast<std::size_t>(inc.neighbor)] |=
            static_cast<std::uint8_t>(1u << (1 - parity));
        queue.push_back(next);
      }
    }
  }
  return reach;
}

bool proper_walk_exists(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                        std::optional<Parity> parity) {
  if (u == v && parity != Parity::kOdd)
    return true;
  const auto row = proper_walk_parities_from(g, c, u)[static_cast<std::size_t>(v)];
  if (!parity)
    return row != 0;
  return (row & (*parity == Parity::kEven ? 1 : 2)) != 0;
}

// ---------------------------------------------------------------------------
// paths

namespace {

class PathSearch {
public:
  PathSearch(const Graph &g, const EdgeColoring &c, std::uint64_t budget)
      : g_(g), c_(c), budget_(budget), visited_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  // Any parity when parity is empty.
  bool path(Vertex u, Vertex v, std::optional<Parity> parity) {
    target_ = v;
    want_ = parity;
    return dfs(u, 0, 0);
  }

  bool odd_cycle(Vertex u) {
    origin_ = u;
    visited_[static_cast<std::size_t>(u)] = 1;
    for (const auto &inc : g_.incident(u)) {
      first_edge_ = inc.edge;
      if (cycle_dfs(inc.neighbor, c_[inc.edge], 1))
        return true;
    }
    return false;
  }

private:
  void tick() {
    if (++nodes_ > budget_)
      throw Error(ErrorKind::kSearchBudgetExceeded,
                  "proper path search exceeded " + std::to_string(budget_) + " nodes");
  }

  bool parity_ok(int length) const {
    return !want_ || (length % 2 == 0) == (*want_ == Parity::kEven);
  }

  bool dfs(Vertex x, Color last, int length) {
    tick();
    if (x == target_)
      return parity_ok(length);
    auto &mark = visited_[static_cast<std::size_t>(x)];
    mark = 1;
    for (const auto &inc : g_.incident(x)) {
      const Color col = c_[inc.edge];
      if (col == last || visited_[static_cast<std::size_t>(inc.neighbor)])
        continue;
      if (dfs(inc.neighbor, col, length + 1))
        return true;
    }
    mark = 0;
    return false;
  }

  bool cycle_dfs(Vertex x, Color last, int length) {
    tick();
    const Color first = c_[first_edge_];
    auto &mark = visited_[static_cast<std::size_t>(x)];
    mark = 1;
    for (const auto &inc : g_.incident(x)) {
      const Color col = c_[inc.edge];
      if (col == last)
        continue;
      if (inc.neighbor == origin_) {
        if (inc.edge != first_edge_ && (length + 1) % 2 == 1 && col != first)
          return true;
        continue;
      }
      if (visited_[static_cast<std::size_t>(inc.neighbor)])
        continue;
      if (cycle_dfs(inc.neighbor, col, length + 1))
        return true;
    }
    mark = 0;
    return false;
  }

  const Graph &g_;
  const EdgeColoring &c_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> visited_;
  Vertex target_ = -1;
  Vertex origin_ = -1;
  EdgeId first_edge_ = -1;
  std::optional<Parity> want_;
};

} // namespace

bool proper_path_exists(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                        const SearchOptions &options) {
  if (u == v)
    return true;
  if (!proper_walk_exists(g, c, u, v))
    return false;
  return PathSearch(g, c, options.node_budget).path(u, v, std::nullopt);
}

bool proper_path_with_parity_exists(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                                    Parity parity, const SearchOptions &options) {
  if (u == v && parity == Parity::kEven)
    return true;
  if (!proper_walk_exists(g, c, u, v, parity))
    return false;
  PathSearch search(g, c, options.node_budget);
  return u == v ? search.odd_cycle(u) : search.path(u, v, parity);
}

// ---------------------------------------------------------------------------
// all-pairs kernel

namespace detail {

std::vector<std::pair<Vertex, Vertex>> PairCheck::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = odd_even ? u : u + 1; v < n; ++v)
      out.emplace_back(u, v);
  return out;
}

PairOutcome PairCheck::check(Vertex u, Vertex v, const std::vector<std::uint8_t> &walk_row) const {
  try {
    const auto reach = walk_row[static_cast<std::size_t>(v)];
    if (!odd_even) {
      if (g.has_edge(u, v))
        return PairOutcome::kOk;
      if (reach == 0)
        return PairOutcome::kFail;
      return PathSearch(g, c, options.node_budget).path(u, v, std::nullopt) ? PairOutcome::kOk
                                                                           : PairOutcome::kFail;
    }
    if ((reach & 2) == 0 || (u != v && (reach & 1) == 0))
      return PairOutcome::kFail;
    if (u == v)
      return PathSearch(g, c, options.node_budget).odd_cycle(u) ? PairOutcome::kOk
                                                                 : PairOutcome::kFail;
    for (const Parity p : {Parity::kOdd, Parity::kEven}) {
      if (p == Parity::kOdd && g.has_edge(u, v))
        continue;
      if (!PathSearch(g, c, options.node_budget).path(u, v, p))
        return PairOutcome::kFail;
    }
    return PairOutcome::kOk;
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kSearchBudgetExceeded)
      return PairOutcome::kBudget;
    throw;
  }
}

ConnectivityReport finish_report(const std::vector<std::pair<Vertex, Vertex>> &pairs,
                                 std::size_t first_bad, PairOutcome outcome) {
  ConnectivityReport report;
  if (first_bad >= pairs.size()) {
    report.pairs_checked = static_cast<long long>(pairs.size());
    return report;
  }
  const auto [u, v] = pairs[first_bad];
  if (outcome == PairOutcome::kBudget)
    throw Error(ErrorKind::kSearchBudgetExceeded,
                "proper path search for pair (" + std::to_string(u) + "," + std::to_string(v) +
                    ") exceeded its node budget; result indeterminate");
  report.connected = false;
  report.failing_pair = pairs[first_bad];
  report.pairs_checked = static_cast<long long>(first_bad) + 1;
  return report;
}

} // namespace detail

namespace {

ConnectivityReport run_serial(const detail::PairCheck &check) {
  validate_coloring(check.g, check.c);
  const auto pairs = check.pairs();
  std::vector<std::uint8_t> row;
  Vertex row_source = -1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (u != row_source) {
      row = proper_walk_parities_from(check.g, check.c, u);
      row_source = u;
    }
    const auto outcome = check.check(u, v, row);
    if (outcome != detail::PairOutcome::kOk)
      return detail::finish_report(pairs, i, outcome);
  }
  return detail::finish_report(pairs, pairs.size(), detail::PairOutcome::kOk);
}

} // namespace

ConnectivityReport is_proper_connected_serial(const Graph &g, const EdgeColoring &c,
                                              const SearchOptions &options) {
  return run_serial({g, c, options, false});
}

ConnectivityReport is_odd_even_proper_serial(const Graph &g, const EdgeColoring &c,
                                             const SearchOptions &options) {
  return run_serial({g, c, options, true});
}

ConnectivityReport is_proper_connected(const Graph &g, const EdgeColoring &c,
                                       const SearchOptions &options) {
  return options.jobs == 1 ? is_proper_connected_serial(g, c, options)
                           : is_proper_connected_parallel(g, c, options);
}

ConnectivityReport is_odd_even_proper(const Graph &g, const EdgeColoring &c,
                                      const SearchOptions &options) {
  return options.jobs == 1 ? is_odd_even_proper_serial(g, c, options)
                           : is_odd_even_proper_parallel(g, c, options);
}

// ---------------------------------------------------------------------------
// proper edge colorings

bool is_proper_edge_coloring(const Graph &g, const EdgeColoring &c) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Color> seen;
    for (const auto &inc : g.incident(v))
      seen.push_back(c[inc.edge]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      return false;
  }
  return true;
}

EdgeColoring greedy_proper_edge_coloring(const Graph &g) {
  EdgeColoring c;
  c.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::uint8_t> taken;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    taken.assign(static_cast<std::size_t>(2 * g.max_degree() + 1), 0);
    for (const Vertex end : {g.edge(e).u, g.edge(e).v})
      for (const auto &inc : g.incident(end))
        if (const Color col = c[inc.edge]; col > 0)
          taken[static_cast<std::size_t>(col)] = 1;
    Color pick = 1;
    while (taken[static_cast<std::size_t>(pick)])
      ++pick;
    c.colors[static_cast<std::size_t>(e)] = pick;
    c.palette_size = std::max(c.palette_size, pick);
  }
  return c;
}

} // namespace pcprod
