#include "randwave/common/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "randwave/common/types.hpp"

namespace randwave
{
namespace
{
__extension__ typedef unsigned __int128 u128;
}

double log_gamma(double x)
{
    return boost::math::lgamma(x);
}

double gamma_fn(double x)
{
    return boost::math::tgamma(x);
}

double gamma_delta_ratio(double a, double delta)
{
    return boost::math::tgamma_delta_ratio(a, delta);
}

double unit_ball_volume(int d)
{
    RANDWAVE_REQUIRE(d >= 1, "unit_ball_volume: d must be positive");
    double const half = 0.5 * d;
    return std::exp(half * std::log(std::numbers::pi) - log_gamma(half + 1.0));
}

double sphere_surface_area(int d)
{
    RANDWAVE_REQUIRE(d >= 1, "sphere_surface_area: d must be positive");
    double const half = 0.5 * (d + 1);
    return 2.0 * std::exp(half * std::log(std::numbers::pi) - log_gamma(half));
}

std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    u128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i)
    {
        // acc * (n - k + i) / i stays integral at every step
        acc = acc * static_cast<u128>(n - k + i);
        acc /= static_cast<u128>(i);
        if (acc > static_cast<u128>(UINT64_MAX))
            throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

double regularized_beta(double x, double a, double b)
{
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    return boost::math::ibeta(a, b, x);
}

}  // namespace randwave
