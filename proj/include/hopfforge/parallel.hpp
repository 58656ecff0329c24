#pragma once

#include <cstddef>
#include <functional>

namespace hopfforge {

// worker count from HOPF_FORGE_THREADS; 0 or unset means hardware concurrency
size_t worker_count();
void set_worker_override(size_t n);  // 0 restores env behaviour

// deterministic static chunking: fn(begin, end) over disjoint ranges.
// Results must be merged by the caller in range order.
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

}  // namespace hopfforge
