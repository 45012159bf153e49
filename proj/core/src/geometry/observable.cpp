#include "randwave/geometry/observable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "randwave/common/types.hpp"

namespace randwave::geometry
{

double TrigSeries::operator()(std::vector<double> const& x) const
{
    RANDWAVE_REQUIRE(static_cast<int>(x.size()) == d, "TrigSeries: bad point");
    double v = 0;
    for (auto const& t : terms)
    {
        double phase = 0;
        for (int i = 0; i < d; ++i)
            phase += t.k[i] * x[i];
        v += t.cos_coeff * std::cos(phase) + t.sin_coeff * std::sin(phase);
    }
    return v;
}

double TrigSeries::mean() const
{
    double m = 0;
    for (auto const& t : terms)
        if (std::all_of(t.k.begin(), t.k.end(), [](int v) { return v == 0; }))
            m += t.cos_coeff;
    return m;
}

int TrigSeries::degree() const
{
    int deg = 0;
    for (auto const& t : terms)
        for (int v : t.k)
            deg = std::max(deg, std::abs(v));
    return deg;
}

double RadialMultiplier::operator()(double r) const
{
    RANDWAVE_REQUIRE(rho.size() == values.size() && rho.size() >= 2,
                     "RadialMultiplier: need at least two samples");
    RANDWAVE_REQUIRE(std::isfinite(r), "RadialMultiplier: non-finite radius");
    if (r <= rho.front())
        return values.front();
    if (r >= rho.back())
        return values.back();
    auto it = std::upper_bound(rho.begin(), rho.end(), r);
    std::size_t i = static_cast<std::size_t>(it - rho.begin());
    double t = (r - rho[i - 1]) / (rho[i] - rho[i - 1]);
    return values[i - 1] + t * (values[i] - values[i - 1]);
}

double liouville_average(Observable const& obs,
                         FrequencyWindow const& window,
                         int d)
{
    if (auto const* m = std::get_if<Multiplication>(&obs))
        return m->a.mean();

    auto const& b = std::get<RadialMultiplier>(obs);
    for (std::size_t i = 1; i < b.rho.size(); ++i)
        RANDWAVE_REQUIRE(b.rho[i] > b.rho[i - 1],
                         "RadialMultiplier: grid must be increasing");
    for (double v : b.values)
        RANDWAVE_REQUIRE(std::isfinite(v), "RadialMultiplier: non-finite sample");
    RANDWAVE_REQUIRE(window.a >= 0 && window.b >= window.a,
                     "liouville_average: invalid interval");
    if (window.b == window.a)
        return b(window.a);

    using boost::math::quadrature::gauss_kronrod;
    auto weight = [d](double r) { return std::pow(r, d - 1); };
    // split at the interpolation knots so each panel is smooth
    std::vector<double> cuts{window.a};
    for (double r : b.rho)
        if (r > window.a && r < window.b)
            cuts.push_back(r);
    cuts.push_back(window.b);
    double num = 0, den = 0;
    for (std::size_t i = 1; i < cuts.size(); ++i)
    {
        num += gauss_kronrod<double, 31>::integrate(
            [&](double r) { return b(r) * weight(r); }, cuts[i - 1], cuts[i], 10, 1e-14);
        den += gauss_kronrod<double, 31>::integrate(weight, cuts[i - 1], cuts[i], 10, 1e-14);
    }
    RANDWAVE_REQUIRE(den > 0 && std::isfinite(num), "liouville_average: not integrable");
    return num / den;
}

}  // namespace randwave::geometry
