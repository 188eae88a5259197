// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace jamsim {

// Worker count for parallel_for. Reads JAMSIM_WORKERS once; 0 or unset means
// hardware concurrency.
unsigned worker_count();

// Runs fn(i) for i in [0, count). Each index must write only its own slots;
// results are then independent of scheduling. Nested calls run serially so a
// parallel sweep does not oversubscribe the per-run loops.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace jamsim
