#include "randwave/common/stats.hpp"

#include <algorithm>
#include <cmath>

#include "randwave/common/types.hpp"

namespace randwave
{

MeanStderr mean_stderr(std::span<double const> xs)
{
    MeanStderr r;
    r.count = xs.size();
    if (xs.empty())
        return r;
    // Welford keeps the merge order fixed, hence bit-reproducible.
    double mean = 0, m2 = 0;
    std::size_t n = 0;
    for (double x : xs)
    {
        ++n;
        double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    r.mean = mean;
    if (n > 1)
    {
        double var = m2 / static_cast<double>(n - 1);
        r.stderr_ = std::sqrt(var / static_cast<double>(n));
    }
    return r;
}

double lower_median(std::vector<double> xs)
{
    RANDWAVE_REQUIRE(!xs.empty(), "lower_median: empty sample");
    auto mid = xs.begin() + static_cast<std::ptrdiff_t>((xs.size() - 1) / 2);
    std::nth_element(xs.begin(), mid, xs.end());
    return *mid;
}

Interval wilson_interval(std::size_t successes, std::size_t n, double z)
{
    if (n == 0)
        return {0.0, 1.0};
    double const nn = static_cast<double>(n);
    double const p = static_cast<double>(successes) / nn;
    double const z2 = z * z;
    double const denom = 1.0 + z2 / nn;
    double const center = (p + z2 / (2 * nn)) / denom;
    double const half
        = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double ks_distance(std::vector<double> xs,
                   std::function<double(double)> const& cdf)
{
    RANDWAVE_REQUIRE(!xs.empty(), "ks_distance: empty sample");
    std::sort(xs.begin(), xs.end());
    double const n = static_cast<double>(xs.size());
    double d = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        double f = cdf(xs[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    RANDWAVE_REQUIRE(!a.empty() && !b.empty(), "ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double const na = static_cast<double>(a.size());
    double const nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size())
    {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na
                                 - static_cast<double>(j) / nb));
    }
    return d;
}

LinearFit least_squares(std::span<double const> x, std::span<double const> y)
{
    RANDWAVE_REQUIRE(x.size() == y.size(), "least_squares: size mismatch");
    LinearFit fit;
    std::size_t const n = x.size();
    if (n < 2)
    {
        fit.degenerate = true;
        if (n == 1)
            fit.intercept = y[0];
        fit.residuals.assign(n, 0.0);
        return fit;
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0)
    {
        fit.degenerate = true;
        fit.intercept = my;
        for (std::size_t i = 0; i < n; ++i)
            fit.residuals.push_back(y[i] - my);
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < n; ++i)
        fit.residuals.push_back(y[i] - (fit.slope * x[i] + fit.intercept));
    return fit;
}

}  // namespace randwave
