#pragma once

#include <cstddef>
#include <functional>

namespace bt {

/// Process-wide default worker count; 0 means hardware concurrency.
void set_default_threads(int threads);
int default_threads();

/// Runs fn(begin, end) over disjoint chunks of [0, count), possibly on
/// several threads. Chunks are fixed by count and the worker count alone,
/// so writes to per-index slots give schedule-independent results.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace bt
