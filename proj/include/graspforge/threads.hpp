#ifndef GRASPFORGE_THREADS_HPP_
#define GRASPFORGE_THREADS_HPP_

#include <cstddef>
#include <functional>

namespace gf {

// Worker cap: min(hardware_concurrency, GRASPFORGE_THREADS if set). At least 1.
int worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks across
// workers; fn must write only to per-index slots so results are independent
// of the worker count. Exceptions from workers are rethrown on the caller.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace gf

#endif  // GRASPFORGE_THREADS_HPP_
