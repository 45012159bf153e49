#pragma once

#include <variant>
#include <vector>

#include "randwave/geometry/manifold.hpp"

namespace randwave::geometry
{

//! Real trigonometric polynomial on T^d:
//! f(x) = sum_j cos_coeff_j cos(k_j.x) + sin_coeff_j sin(k_j.x).
struct TrigSeries
{
    struct Term
    {
        std::vector<int> k;
        double cos_coeff = 0;
        double sin_coeff = 0;
    };

    int d = 2;
    std::vector<Term> terms;

    double operator()(std::vector<double> const& x) const;
    double mean() const;
    //! Largest |k_i| over all terms.
    int degree() const;
};

//! Multiplication by a real function on T^d.
struct Multiplication
{
    TrigSeries a;
};

enum class Interpolation
{
    Linear
};

//! Fourier multiplier b(|xi|) given by samples on an increasing grid.
struct RadialMultiplier
{
    std::vector<double> rho;
    std::vector<double> values;
    Interpolation rule = Interpolation::Linear;

    double operator()(double r) const;
};

using Observable = std::variant<Multiplication, RadialMultiplier>;

//! Liouville mean of the symbol over the annulus |xi| in window (a, b].
double liouville_average(Observable const& obs,
                         FrequencyWindow const& window,
                         int d);

}  // namespace randwave::geometry
