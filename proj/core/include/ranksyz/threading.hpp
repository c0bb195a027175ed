#pragma once

#include <cstddef>
#include <functional>

namespace ranksyz {

// Global worker cap shared by all internally parallel operations
// (elimination row passes, Monte Carlo batches). 0 means "hardware".
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(begin..end) split over the worker pool. Work is partitioned into
// contiguous index blocks so results never depend on thread scheduling.
void parallel_for(size_t begin, size_t end, const std::function<void(size_t, size_t)>& fn);

}  // namespace ranksyz
