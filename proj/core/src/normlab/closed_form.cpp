#include "randwave/normlab/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "randwave/common/special.hpp"

namespace randwave::normlab
{

double sphere_coordinate_moment(double q, std::size_t N, Field field)
{
    RANDWAVE_REQUIRE(N >= 1, "sphere_coordinate_moment: N must be >= 1");
    RANDWAVE_REQUIRE(q >= 0, "sphere_coordinate_moment: q must be >= 0");
    double const n = static_cast<double>(N);
    if (field == Field::Complex)
    {
        // q Gamma(q/2) Gamma(N) / (2 Gamma(q/2 + N)) = Gamma(q/2+1) Gamma(N) / Gamma(q/2+N)
        return gamma_fn(0.5 * q + 1) * gamma_delta_ratio(n, 0.5 * q);
    }
    return gamma_fn(0.5 * (q + 1)) / std::sqrt(std::numbers::pi) * gamma_delta_ratio(0.5 * n, 0.5 * q);
}

double a_qh_from_profile(double q, std::size_t N, double profile_integral, Field field)
{
    RANDWAVE_REQUIRE(q >= 2, "a_qh_closed_form: q must be >= 2");
    RANDWAVE_REQUIRE(profile_integral > 0, "a_qh_closed_form: profile integral must be positive");
    double log_aq = std::log(profile_integral) + std::log(sphere_coordinate_moment(q, N, field));
    return std::exp(log_aq / q);
}

double a_qh_closed_form(double q, geometry::SpectralBlock const& block, Field field)
{
    RANDWAVE_REQUIRE(!block.empty(), "a_qh_closed_form: empty block");
    double const vol = block.manifold.volume();
    double const N = static_cast<double>(block.dim());
    // int_M (N/Vol)^{q/2} dx, in log space
    double log_profile = std::log(vol) + 0.5 * q * (std::log(N) - std::log(vol));
    RANDWAVE_REQUIRE(q >= 2, "a_qh_closed_form: q must be >= 2");
    double log_aq = log_profile + std::log(sphere_coordinate_moment(q, block.dim(), field));
    return std::exp(log_aq / q);
}

double a_qh_large_n_limit(double q, double volume)
{
    return std::pow(volume, 1.0 / q - 0.5) * std::exp(log_gamma(0.5 * q + 1) / q);
}

double sphere_coordinate_tail(double t, std::size_t N, Field field)
{
    RANDWAVE_REQUIRE(N >= 1, "sphere_coordinate_tail: N must be >= 1");
    if (t <= 0)
        return 1.0;
    if (t >= 1)
        return 0.0;
    double const n = static_cast<double>(N);
    if (field == Field::Complex)
        return std::pow(1.0 - t * t, n - 1);
    if (N == 1)
        return 1.0;  // |a_1| = 1 almost surely
    return regularized_beta(1.0 - t * t, 0.5 * (n - 1), 0.5);
}

}  // namespace randwave::normlab
