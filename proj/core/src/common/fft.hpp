#pragma once

#include <span>
#include <vector>

#include "randwave/common/types.hpp"

namespace randwave::detail
{

enum class FftDirection
{
    Forward = -1,  // sum_j x_j e^{-i 2pi jk/n}
    Backward = +1  // sum_j x_j e^{+i 2pi jk/n}
};

// In-place unnormalized complex DFT over a row-major array with the given
// extents. Plans are cached per shape; execution is thread-safe.
void fft_inplace(std::span<cplx> data,
                 std::vector<int> const& dims,
                 FftDirection dir);

// Smallest n >= min_size with no prime factor above 7.
int fast_fft_size(int min_size);

}  // namespace randwave::detail
