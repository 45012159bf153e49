#pragma once

#include <cstddef>
#include <functional>

namespace randwave
{

//! Runs body(i) for i in [0, count) on up to `workers` threads.
//! Each index runs exactly once; the first exception (lowest index) is
//! rethrown after all threads join.
void parallel_for(std::size_t count,
                  unsigned workers,
                  std::function<void(std::size_t)> const& body);

//! Worker count from RANDWAVE_WORKERS, else 1.
unsigned default_worker_count();

}  // namespace randwave
