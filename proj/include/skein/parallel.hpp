#pragma once

#include <cstddef>
#include <functional>

namespace skein {

/// Worker count used by parallel loops; defaults to the hardware parallelism.
unsigned default_threads();
void set_default_threads(unsigned n);

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// Work items must be independent; results are written by index so the
/// outcome does not depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace skein
