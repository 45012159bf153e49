#include "common/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace randwave::detail
{
namespace
{
using PlanKey = std::tuple<std::vector<int>, int>;

class PlanCache
{
  public:
    ~PlanCache()
    {
        for (auto& [key, plan] : plans_)
            fftw_destroy_plan(plan);
    }

    fftw_plan get(std::vector<int> const& dims, int sign)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        PlanKey key{dims, sign};
        if (auto it = plans_.find(key); it != plans_.end())
            return it->second;

        std::size_t total = std::accumulate(
            dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
        auto* buf = fftw_alloc_complex(total);
        fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()),
                                       dims.data(),
                                       buf,
                                       buf,
                                       sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        plans_.emplace(std::move(key), plan);
        return plan;
    }

  private:
    std::mutex mutex_;
    std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache()
{
    static PlanCache instance;
    return instance;
}
}  // namespace

void fft_inplace(std::span<cplx> data,
                 std::vector<int> const& dims,
                 FftDirection dir)
{
    std::size_t total = 1;
    for (int n : dims)
    {
        RANDWAVE_REQUIRE(n > 0, "fft: extents must be positive");
        total *= static_cast<std::size_t>(n);
    }
    RANDWAVE_REQUIRE(total == data.size(), "fft: size mismatch");
    int sign = dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = cache().get(dims, sign);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, ptr, ptr);
}

int fast_fft_size(int min_size)
{
    for (int n = std::max(min_size, 1);; ++n)
    {
        int m = n;
        for (int p : {2, 3, 5, 7})
            while (m % p == 0)
                m /= p;
        if (m == 1)
            return n;
    }
}

}  // namespace randwave::detail
