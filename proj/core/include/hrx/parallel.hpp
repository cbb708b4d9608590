#pragma once

#include <functional>
#include <vector>

namespace hrx {

/// Worker count: HRX_THREADS env var if set, else hardware concurrency.
int thread_count();
void set_thread_count(int n);

/// Run fn(k) for k in [0, nz), partitioned in contiguous blocks over threads.
void parallel_for_planes(int nz, const std::function<void(int)>& fn);

/// Deterministic reduction: per-plane partial sums are computed in parallel
/// and combined serially in plane order, independent of the thread count.
double plane_sum(int nz, const std::function<double(int)>& plane_fn);

}  // namespace hrx
