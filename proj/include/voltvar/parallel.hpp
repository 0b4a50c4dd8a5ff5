#pragma once

#include <functional>

namespace voltvar {

/// Runs fn(i) for i in [begin, end) across a worker pool. workers <= 1 runs
/// inline; workers == 0 picks the hardware count. Callers keep determinism by
/// writing to preallocated per-index slots. The first exception is rethrown
/// after all workers finish.
void parallel_for(int begin, int end, int workers, const std::function<void(int)>& fn);

}  // namespace voltvar
