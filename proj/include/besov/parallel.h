#pragma once

#include <cstddef>
#include <functional>

namespace besov {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// processed exactly once; callers write results into slot i, so assembly
/// order never depends on scheduling. The first exception thrown by any
/// body is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// hardware_concurrency(), capped by the BESOV_BALL_THREADS environment
/// variable when it holds a positive integer.
unsigned default_thread_count();

}  // namespace besov
