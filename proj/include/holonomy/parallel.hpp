#pragma once

#include <cstddef>
#include <functional>

namespace holonomy {

/// Worker count: HOLONOMY_LAB_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls fn(i) for i in [0, count) on up to thread_count() threads. Each index is
/// visited exactly once; callers write results into per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace holonomy
