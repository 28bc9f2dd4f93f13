#pragma once

#include <cstdint>
#include <functional>

namespace rlab {

// Worker count for data-parallel loops. Resolution order: set_worker_count()
// (the CLI --threads flag), RESTRICT_LAB_THREADS, hardware concurrency.
int worker_count();
void set_worker_count(int n);

// Runs fn(block) for block = 0..n_blocks-1 on the worker pool. Blocks are a
// fixed decomposition of the work chosen by the caller, so results that are
// reduced in block order do not depend on the number of workers.
void parallel_blocks(std::int64_t n_blocks, const std::function<void(std::int64_t)>& fn);

}  // namespace rlab
