#pragma once

#include <functional>

namespace obslab {

/// Worker count for internal sweeps: the OBSLAB_THREADS environment
/// variable when set (clamped to >= 1), otherwise 1.
int thread_count();

/// Split [0, n) into contiguous chunks and run body(begin, end) on each,
/// possibly on separate threads.  Chunks write disjoint output slices, so
/// results do not depend on the worker count.
void parallel_for(int n, const std::function<void(int, int)>& body);

}  // namespace obslab
