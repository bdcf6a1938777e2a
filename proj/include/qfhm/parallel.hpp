#pragma once

#include <cstddef>
#include <functional>

namespace qfhm {

// Worker count: QFHM_THREADS when set (clamped to [1, 64]), otherwise the
// hardware concurrency.  Results never depend on the value; it only controls
// how index-assembled sweeps are scheduled.
int thread_budget();

// Runs body(i) for i in [0, n).  Falls back to a plain loop for small n or a
// budget of one.  The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qfhm
