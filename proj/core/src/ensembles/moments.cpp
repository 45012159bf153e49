#include "randwave/ensembles/moments.hpp"

#include <cmath>

#include "randwave/common/parallel.hpp"
#include "randwave/common/stats.hpp"
#include "randwave/common/types.hpp"

namespace randwave::ensembles
{

MomentCheck moment_inequality_check(SymmetricSampler const& sample,
                                    int q,
                                    std::size_t trials,
                                    RngStream const& base,
                                    unsigned workers)
{
    RANDWAVE_REQUIRE(q >= 1, "moment check: q must be >= 1");
    RANDWAVE_REQUIRE(trials >= 2, "moment check: need at least two trials");
    std::vector<double> lhs(trials), rhs(trials);
    double const qq = std::pow(static_cast<double>(q), q);
    parallel_for(trials, workers, [&](std::size_t i) {
        RngStream rng = base.child(i);
        auto u = sample(rng);
        double s = 0, s2 = 0;
        for (double v : u)
        {
            s += v;
            s2 += v * v;
        }
        lhs[i] = std::pow(s, 2 * q);
        rhs[i] = qq * std::pow(s2, q);
    });
    auto l = mean_stderr(lhs);
    auto r = mean_stderr(rhs);
    MomentCheck out{l.mean, l.stderr_, r.mean, r.stderr_, false};
    double se = std::hypot(l.stderr_, r.stderr_);
    out.holds = out.lhs <= out.rhs + 3.0 * se;
    return out;
}

MomentCheck rademacher_moment_exact(int K, int q)
{
    RANDWAVE_REQUIRE(K >= 1 && K <= 30, "rademacher_moment_exact: K in [1, 30]");
    RANDWAVE_REQUIRE(q >= 1, "rademacher_moment_exact: q must be >= 1");
    double lhs = 0;
    std::uint64_t const patterns = std::uint64_t{1} << K;
    for (std::uint64_t bits = 0; bits < patterns; ++bits)
    {
        int s = 0;
        for (int k = 0; k < K; ++k)
            s += (bits >> k & 1u) ? 1 : -1;
        lhs += std::pow(static_cast<double>(s), 2 * q);
    }
    lhs /= static_cast<double>(patterns);
    // sum u_k^2 = K identically
    double rhs = std::pow(static_cast<double>(q), q) * std::pow(static_cast<double>(K), q);
    return {lhs, 0.0, rhs, 0.0, lhs <= rhs};
}

SymmetricSampler rademacher_sampler(int K)
{
    return [K](RngStream& rng) {
        std::vector<double> u(K);
        for (auto& v : u)
            v = rng.rademacher();
        return u;
    };
}

SymmetricSampler gaussian_sampler(int K)
{
    return [K](RngStream& rng) {
        std::vector<double> u(K);
        for (auto& v : u)
            v = rng.normal();
        return u;
    };
}

}  // namespace randwave::ensembles
