#include "randwave/geometry/weyl.hpp"

#include <cmath>

#include "randwave/common/special.hpp"
#include "randwave/common/types.hpp"

namespace randwave::geometry
{
namespace
{
std::int64_t isqrt(std::int64_t v)
{
    if (v < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

// Lattice points of Z^dims in the closed ball |n|^2 <= budget.
std::uint64_t count_ball(int dims, std::int64_t budget)
{
    if (budget < 0)
        return 0;
    std::int64_t r = isqrt(budget);
    if (dims == 1)
        return static_cast<std::uint64_t>(2 * r + 1);
    std::uint64_t total = 0;
    for (std::int64_t n = -r; n <= r; ++n)
        total += count_ball(dims - 1, budget - n * n);
    return total;
}
}  // namespace

std::uint64_t weyl_count(ManifoldSpec const& manifold, double lambda)
{
    RANDWAVE_REQUIRE(lambda >= 0, "weyl_count: lambda must be >= 0");
    if (manifold.kind == ManifoldKind::Torus)
    {
        // |n| <= lambda  <=>  |n|^2 <= floor(lambda^2), checked exactly
        auto budget = static_cast<std::int64_t>(std::floor(lambda * lambda));
        while (std::sqrt(static_cast<double>(budget + 1)) <= lambda)
            ++budget;
        while (budget > 0 && std::sqrt(static_cast<double>(budget)) > lambda)
            --budget;
        return count_ball(manifold.d, budget);
    }
    std::uint64_t total = 0;
    for (std::int64_t k = 0; sphere_eigen_frequency(manifold.d, k) <= lambda; ++k)
        total += sphere_harmonic_dim(manifold.d, k);
    return total;
}

double weyl_prediction(ManifoldSpec const& manifold, double lambda)
{
    int const d = manifold.d;
    return unit_ball_volume(d) * manifold.volume() * std::pow(lambda, d)
           / std::pow(two_pi, d);
}

}  // namespace randwave::geometry
