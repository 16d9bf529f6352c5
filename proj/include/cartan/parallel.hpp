#pragma once

#include <cstddef>
#include <functional>

namespace cartan {

// Worker count: CARTAN_INVARIANTS_THREADS if set to an integer >= 1, else the hardware count.
int worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index is visited once;
// callers write results into preallocated slots so the output does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cartan
