#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "randwave/ensembles/rng_stream.hpp"

namespace randwave::ensembles
{

//! Draws one realization of independent symmetric variables u_1..u_K.
using SymmetricSampler = std::function<std::vector<double>(RngStream&)>;

struct MomentCheck
{
    double lhs = 0;         //!< E (sum u_k)^{2q}
    double lhs_stderr = 0;
    double rhs = 0;         //!< q^q E (sum u_k^2)^q
    double rhs_stderr = 0;
    bool holds = false;
};

//! Monte-Carlo check of E(sum u)^{2q} <= q^q E(sum u^2)^q.
//! Trial i uses base.child(i).
MomentCheck moment_inequality_check(SymmetricSampler const& sample,
                                    int q,
                                    std::size_t trials,
                                    RngStream const& base,
                                    unsigned workers = 1);

//! Exact values by enumerating all 2^K sign patterns of K Rademacher
//! variables (stderr fields are 0).
MomentCheck rademacher_moment_exact(int K, int q);

SymmetricSampler rademacher_sampler(int K);
SymmetricSampler gaussian_sampler(int K);

}  // namespace randwave::ensembles
