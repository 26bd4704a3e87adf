#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace trialkit {

/// Run fn(i) for i in [0, n) across `workers` threads. Results must be written
/// to index-addressed slots by the caller; the iteration order is unspecified
/// but the final state is identical for any worker count. The first exception
/// wins and is rethrown on the calling thread.
void parallel_for(size_t n, size_t workers, const std::function<void(size_t)>& fn);

/// Default worker count: hardware concurrency, at least 1.
size_t default_workers();

} // namespace trialkit
