#pragma once

#include <cstddef>
#include <functional>

namespace ftlab::lab {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// claimed from a shared counter; body must not throw (callers catch per
/// point). workers <= 1 runs inline.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

/// FTLAB_WORKERS when set to a positive integer, else fallback.
int workers_from_env(int fallback);

}  // namespace ftlab::lab
