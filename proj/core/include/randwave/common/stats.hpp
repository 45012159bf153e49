#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace randwave
{

struct MeanStderr
{
    double mean = 0;
    double stderr_ = 0;
    std::size_t count = 0;
};

//! Sample mean with standard error (n-1 normalization).
MeanStderr mean_stderr(std::span<double const> xs);

//! Lower median: element of rank floor((n-1)/2) in sorted order.
double lower_median(std::vector<double> xs);

struct Interval
{
    double lo = 0;
    double hi = 1;
};

//! Wilson score interval for a binomial proportion at normal quantile z.
Interval wilson_interval(std::size_t successes, std::size_t n, double z = 1.96);

//! Sup distance between the empirical CDF of xs and a continuous CDF.
double ks_distance(std::vector<double> xs,
                   std::function<double(double)> const& cdf);

//! Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct LinearFit
{
    double slope = 0;
    double intercept = 0;
    std::vector<double> residuals;
    bool degenerate = false;
};

//! Ordinary least squares y ~ slope * x + intercept.
LinearFit least_squares(std::span<double const> x, std::span<double const> y);

}  // namespace randwave
