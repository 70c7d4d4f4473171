#pragma once

#include <cstddef>
#include <functional>

namespace prismlab {

/// Worker count for slicewise-parallel loops; 1 by default. Results never
/// depend on the setting: work items are indexed and merged in order.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs fn(i) for i in [0, n). With thread_count() > 1, items are split in
/// contiguous chunks across workers; fn must only write to its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace prismlab
