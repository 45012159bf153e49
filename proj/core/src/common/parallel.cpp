#include "randwave/common/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace randwave
{

void parallel_for(std::size_t count,
                  unsigned workers,
                  std::function<void(std::size_t)> const& body)
{
    if (count == 0)
        return;
    workers = std::max(1u, workers);
    if (workers == 1 || count == 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::size_t first_error_index = count;

    auto worker = [&] {
        for (;;)
        {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (i < first_error_index)
                {
                    first_error_index = i;
                    first_error = std::current_exception();
                }
            }
        }
    };

    unsigned const n_threads
        = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

unsigned default_worker_count()
{
    if (char const* env = std::getenv("RANDWAVE_WORKERS"))
    {
        try
        {
            long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        }
        catch (std::exception const&)
        {
        }
    }
    return 1;
}

}  // namespace randwave
