#pragma once

#include <cstdint>
#include <functional>

namespace coalloc {

// Worker count: `requested` if positive, else the COALLOC_THREADS environment
// variable, else hardware concurrency. Always >= 1.
int resolve_thread_count(int requested);

// Runs body(block) for every block in [0, num_blocks) on up to `threads`
// workers. Callers store per-block results and reduce them in block order,
// which keeps outputs independent of the worker count.
void parallel_blocks(std::uint64_t num_blocks, int threads,
                     const std::function<void(std::uint64_t)>& body);

}  // namespace coalloc
