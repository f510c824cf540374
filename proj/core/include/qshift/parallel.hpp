#pragma once

#include <cstddef>
#include <functional>

namespace qshift {

// Runs fn(i) for every i in [0, n) on `jobs` threads; jobs <= 1 runs inline.
// Indices are handed out dynamically. The first exception thrown by fn is
// rethrown after all workers stop.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

} // namespace qshift
