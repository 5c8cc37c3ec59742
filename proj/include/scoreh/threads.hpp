#pragma once

#include <cstddef>
#include <functional>

namespace scoreh {

/// Worker count: min(logical cores, RBF_SCORE_THREADS when set). At least 1.
std::size_t worker_count();

/// Run fn(0..count-1) on up to worker_count() threads. Results must be written
/// to caller-owned slots indexed by the job id so the merge is deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace scoreh
