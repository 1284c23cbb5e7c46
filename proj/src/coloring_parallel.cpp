#include <atomic>
#include <exception>
#include <limits>

#include "pcprod/coloring.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcprod {

namespace {

// Every pair below the final first_bad index is always examined, so the
// reported pair matches the serial scan for any thread count.
ConnectivityReport run_parallel(const detail::PairCheck &check) {
  validate_coloring(check.g, check.c);
  const auto pairs = check.pairs();
  const int n = check.g.vertex_count();
  const auto total = static_cast<long long>(pairs.size());

  std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(n));
  std::vector<detail::PairOutcome> outcome(pairs.size(), detail::PairOutcome::kOk);
  std::atomic<long long> first_bad{std::numeric_limits<long long>::max()};
  std::exception_ptr error;

#ifdef _OPENMP
  const int threads = check.options.jobs > 0 ? check.options.jobs : omp_get_max_threads();
#endif

#pragma omp parallel num_threads(threads)
  {
#pragma omp for schedule(static)
    for (int u = 0; u < n; ++u)
      rows[static_cast<std::size_t>(u)] = proper_walk_parities_from(check.g, check.c, u);

#pragma omp for schedule(dynamic, 4)
    for (long long i = 0; i < total; ++i) {
      if (i > first_bad.load(std::memory_order_relaxed))
        continue;
      const auto [u, v] = pairs[static_cast<std::size_t>(i)];
      try {
        const auto result = check.check(u, v, rows[static_cast<std::size_t>(u)]);
        if (result != detail::PairOutcome::kOk) {
          outcome[static_cast<std::size_t>(i)] = result;
          long long seen = first_bad.load();
          while (i < seen && !first_bad.compare_exchange_weak(seen, i)) {
          }
        }
      } catch (...) {
#pragma omp critical(pcprod_pair_error)
        if (!error)
          error = std::current_exception();
      }
    }
  }
  if (error)
    std::rethrow_exception(error);

  const long long bad = first_bad.load();
  if (bad >= total)
    return detail::finish_report(pairs, pairs.size(), detail::PairOutcome::kOk);
  return detail::finish_report(pairs, static_cast<std::size_t>(bad),
                               outcome[static_cast<std::size_t>(bad)]);
}

} // namespace

ConnectivityReport is_proper_connected_parallel(const Graph &g, const EdgeColoring &c,
                                                const SearchOptions &options) {
  return run_parallel({g, c, options, false});
}

ConnectivityReport is_odd_even_proper_parallel(const Graph &g, const EdgeColoring &c,
                                               const SearchOptions &options) {
  return run_parallel({g, c, options, true});
}

} // namespace pcprod
