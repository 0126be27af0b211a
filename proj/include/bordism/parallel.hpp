#pragma once

#include <cstddef>
#include <functional>

namespace bordism {

// Runs fn(0..n-1) on up to `jobs` threads. Callers write results to disjoint
// slots, so outputs stay deterministic regardless of the worker count. The
// first exception thrown by a worker is rethrown after all workers join.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Hardware concurrency, at least 1.
int default_jobs();

} // namespace bordism
