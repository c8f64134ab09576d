#pragma once

#include <cstddef>
#include <functional>

namespace triesmooth {

/// Worker cap: TRIE_SMOOTH_THREADS if set (minimum 1), else the hardware
/// concurrency.
unsigned max_worker_threads();

/// Runs body(0..count-1) on up to max_worker_threads() threads. Bodies must
/// write only to their own slots; index assignment is deterministic, so
/// results cannot depend on the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace triesmooth
