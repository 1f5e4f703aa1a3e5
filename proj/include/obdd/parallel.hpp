#pragma once

#include <cstddef>
#include <functional>

namespace obdd {

// Worker cap: min(hardware_concurrency, OBDD_THREADS) when the env var is set
// and positive; at least 1.
int thread_cap();

// Runs fn(i) for i in [0, count). Splits into contiguous chunks when more than
// one worker is available and the range is large enough to pay for the thread
// startup; otherwise runs inline. fn must be safe to call concurrently for
// distinct i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace obdd
