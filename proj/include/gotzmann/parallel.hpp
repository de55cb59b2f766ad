#ifndef GOTZMANN_PARALLEL_HPP
#define GOTZMANN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace gotzmann {

/// Worker count: GOTZMANN_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers, worker w
/// taking indices w, w + threads, ... Each index is visited exactly once;
/// callers write results into per-index slots so the merge order is fixed.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t, unsigned)>& body);

} // namespace gotzmann

#endif
