#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace csn {

/// Worker count: CS_NEIGHBORLY_THREADS when set (clamped to ≥ 1),
/// otherwise the hardware concurrency.
unsigned thread_cap();

/// Runs f(i) for i in [0, n) across up to thread_cap() threads. Work is
/// striped by index, so any per-index output the caller stores is
/// position-determined and independent of the cap.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace csn
