#ifndef OTKIT_PARALLEL_HPP
#define OTKIT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace otk {

// Worker count for parallel scans: OTKIT_WORKERS when set, otherwise the
// machine parallelism. Affects speed only; results are merged in canonical
// order everywhere.
std::size_t worker_count();

// Runs fn(i) for every i in [0, count). fn must be safe to call from
// multiple threads on distinct indices.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace otk

#endif
