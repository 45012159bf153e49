#include "randwave/wave/birkhoff.hpp"

#include <cmath>

#include "randwave/common/types.hpp"

namespace randwave::wave
{
namespace
{
constexpr double kResonance = 1e-12;

void check_direction(int d, std::vector<double> const& x, std::vector<double> const& dir)
{
    RANDWAVE_REQUIRE(static_cast<int>(x.size()) == d && static_cast<int>(dir.size()) == d,
                     "birkhoff: point and direction must match the torus dimension");
    double n2 = 0;
    for (double v : dir)
        n2 += v * v;
    RANDWAVE_REQUIRE(std::abs(n2 - 1.0) <= 1e-12, "birkhoff: direction must be a unit vector");
}

double dot(std::vector<int> const& k, std::vector<double> const& v)
{
    double s = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        s += k[i] * v[i];
    return s;
}
}  // namespace

double birkhoff_average(DampingProfile const& damping,
                        std::vector<double> const& x,
                        std::vector<double> const& direction,
                        double t)
{
    check_direction(damping.d(), x, direction);
    RANDWAVE_REQUIRE(t >= 0, "birkhoff: t must be >= 0");
    if (t == 0)
        return damping(x);
    double avg = 0;
    for (auto const& term : damping.a.terms)
    {
        double const phase = dot(term.k, x);
        double const w = dot(term.k, direction);
        if (std::abs(w) < kResonance)
        {
            avg += term.cos_coeff * std::cos(phase) + term.sin_coeff * std::sin(phase);
            continue;
        }
        double const wt = w * t;
        avg += term.cos_coeff * (std::sin(phase + wt) - std::sin(phase)) / wt;
        avg += term.sin_coeff * (std::cos(phase) - std::cos(phase + wt)) / wt;
    }
    return avg;
}

double birkhoff_limit_estimate(DampingProfile const& damping,
                               std::vector<double> const& x,
                               std::vector<double> const& direction)
{
    check_direction(damping.d(), x, direction);
    double avg = 0;
    for (auto const& term : damping.a.terms)
    {
        if (std::abs(dot(term.k, direction)) >= kResonance)
            continue;
        double const phase = dot(term.k, x);
        avg += term.cos_coeff * std::cos(phase) + term.sin_coeff * std::sin(phase);
    }
    return avg;
}

}  // namespace randwave::wave
