#pragma once

#include <cstddef>
#include <functional>

namespace kerrsq {

// Worker count: KERRSQ_THREADS if set (clamped to >= 1), otherwise the
// available hardware parallelism.
unsigned worker_count();

// Static block partition of [0, n). fn(i) must touch only state owned by
// index i, so the result is identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace kerrsq
