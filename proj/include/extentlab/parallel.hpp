#pragma once

#include <cstddef>
#include <functional>

namespace extentlab {

// Runs body(i) for i in [0, n) on up to n_threads workers. Work is dealt in
// static contiguous blocks, each index is executed exactly once, and the caller
// is responsible for making per-index work independent (the project-wide rule:
// parallelism only across replicates/chains, each with its own RNG substream and
// output slot, so results are byte-identical for any thread count).
// n_threads <= 1 runs inline. The first exception thrown by any worker is
// rethrown to the caller after all workers join.
void parallel_for(std::size_t n, int n_threads, const std::function<void(std::size_t)>& body);

// Resolve a thread-count request: n <= 0 means "use hardware concurrency".
int resolve_threads(int requested);

}  // namespace extentlab
