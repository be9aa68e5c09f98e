#pragma once

#include <cstddef>
#include <functional>

namespace sl1d {

/// Process-wide cap on worker threads (0 = hardware concurrency).
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs body(begin, end) over disjoint chunks of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace sl1d
