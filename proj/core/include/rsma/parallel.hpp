#pragma once

#include <cstddef>
#include <functional>

namespace rsma {

/// Worker count: RSMA_THREADS if set and positive, otherwise (unset or 0)
/// the hardware concurrency.
int thread_count();

/// Calls fn(i) for every i in [0, count) on up to thread_count() threads.
/// Callers write results into slot i so that any reduction afterwards runs
/// in index order. The first exception thrown by fn is rethrown here.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace rsma
