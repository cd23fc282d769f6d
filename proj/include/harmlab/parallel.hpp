#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace harmlab {

/// Worker cap: HARMLAB_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(i) for i in [0, n) on up to worker_count() threads. Tasks are
/// handed out by index, so results written to per-index slots do not depend
/// on the number of workers. The exception of the lowest failing index is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

/// Evaluates term(i) for all i in parallel, then sums the values in index
/// order.
double ordered_sum(std::size_t n, const std::function<double(std::size_t)>& term);

/// Evaluates fn(i) into slot i.
std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& fn);

}  // namespace harmlab
