#pragma once

#include <cstddef>
#include <functional>

namespace glstar {

/// Worker count: GLSTAR_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Callers write
/// results into per-index slots so the outcome does not depend on scheduling.
/// If any call throws, the exception from the lowest index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace glstar
