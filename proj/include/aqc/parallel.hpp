#pragma once

#include <cstddef>
#include <functional>

namespace aqc {

// Worker cap for data-parallel loops. AQC_THREADS=0 (or unset) means auto.
int worker_threads();

// Runs body(i) for i in [0, count) over a blocked thread partition. Each
// index owns its output slot, so results do not depend on the thread count.
// The first exception thrown by any worker is rethrown on the caller.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace aqc
