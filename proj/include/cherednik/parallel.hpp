#pragma once

#include <cstddef>
#include <functional>

namespace cherednik {

// Worker count: hardware concurrency, capped by CHEREDNIK_KIT_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n). Each index is processed exactly once; callers
// write results into preallocated slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cherednik
