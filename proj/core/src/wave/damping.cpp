#include "randwave/wave/damping.hpp"

#include <algorithm>
#include <cmath>

#include "randwave/common/special.hpp"
#include "randwave/common/types.hpp"

namespace randwave::wave
{

DampingProfile DampingProfile::zero(int d)
{
    RANDWAVE_REQUIRE(d >= 1, "damping: d must be >= 1");
    return {geometry::TrigSeries{d, {}}};
}

DampingProfile DampingProfile::constant(int d, double a0)
{
    RANDWAVE_REQUIRE(a0 >= 0, "damping: constant must be >= 0");
    auto p = zero(d);
    p.a.terms.push_back({std::vector<int>(d, 0), a0, 0.0});
    return p;
}

DampingProfile DampingProfile::strip(int d, double a0, int p)
{
    RANDWAVE_REQUIRE(a0 >= 0 && p >= 1, "strip damping needs a0 >= 0, p >= 1");
    // cos^{2p}(x/2) = 4^{-p} [C(2p,p) + 2 sum_m C(2p,p-m) cos(m x)]
    auto prof = zero(d);
    double const scale = a0 * std::pow(0.25, p);
    for (int m = 0; m <= p; ++m)
    {
        std::vector<int> k(d, 0);
        k[0] = m;
        double c = static_cast<double>(binomial(2 * p, p - m)) * scale;
        prof.a.terms.push_back({k, m == 0 ? c : 2 * c, 0.0});
    }
    return prof;
}

double DampingProfile::clipped(std::vector<double> const& x) const
{
    return std::max(0.0, a(x));
}

bool DampingProfile::identically_zero() const
{
    return std::all_of(a.terms.begin(), a.terms.end(), [](auto const& t) {
        return t.cos_coeff == 0.0 && t.sin_coeff == 0.0;
    });
}

bool DampingProfile::depends_only_on_x1() const
{
    for (auto const& t : a.terms)
        for (std::size_t i = 1; i < t.k.size(); ++i)
            if (t.k[i] != 0 && (t.cos_coeff != 0 || t.sin_coeff != 0))
                return false;
    return true;
}

bool DampingProfile::even_in_x1() const
{
    if (!depends_only_on_x1())
        return false;
    return std::all_of(a.terms.begin(), a.terms.end(), [](auto const& t) {
        return t.sin_coeff == 0.0 || t.k[0] == 0;
    });
}

double DampingProfile::grid_minimum(int n) const
{
    int const dim = a.d;
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i)
        total *= static_cast<std::size_t>(n);
    double m = std::numeric_limits<double>::infinity();
    std::vector<double> x(dim);
    for (std::size_t idx = 0; idx < total; ++idx)
    {
        std::size_t rest = idx;
        for (int i = dim - 1; i >= 0; --i)
        {
            x[i] = two_pi * static_cast<double>(rest % n) / n;
            rest /= static_cast<std::size_t>(n);
        }
        m = std::min(m, a(x));
    }
    return m;
}

void DampingProfile::validate(bool require_nonzero) const
{
    int n = std::max(64, 8 * a.degree() + 1);
    if (a.d >= 2)
        n = std::min(n, 256);
    RANDWAVE_REQUIRE(grid_minimum(n) >= -1e-12, "damping must be nonnegative");
    if (require_nonzero)
        RANDWAVE_REQUIRE(!identically_zero(), "damping must not vanish identically");
}

}  // namespace randwave::wave
