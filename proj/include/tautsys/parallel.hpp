#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace tautsys {

// Explicit request, else TAUTSYS_THREADS, else 1.
unsigned resolve_threads(std::optional<unsigned> requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
// results into per-index slots, so output never depends on the worker count.
// The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace tautsys
