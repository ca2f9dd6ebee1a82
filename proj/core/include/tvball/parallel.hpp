#pragma once

#include <functional>

namespace tvball {

/// Worker count: min(hardware_concurrency, TVBALL_THREADS) when the
/// environment variable is set, at least 1.
int worker_count();

/// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each,
/// one chunk per worker thread. Runs inline when n is small or one worker.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace tvball
