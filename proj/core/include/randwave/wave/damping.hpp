#pragma once

#include <vector>

#include "randwave/geometry/observable.hpp"

namespace randwave::wave
{

//! Nonnegative damping coefficient a(x) on T^d as a trigonometric polynomial.
struct DampingProfile
{
    geometry::TrigSeries a;

    static DampingProfile zero(int d);
    static DampingProfile constant(int d, double a0);
    //! a0 ((1 + cos x_1) / 2)^p: vanishes only on {x_1 = pi}.
    static DampingProfile strip(int d, double a0, int p);

    int d() const { return a.d; }
    double operator()(std::vector<double> const& x) const { return a(x); }
    //! Evaluation clipped at 0 (the certificate tolerates -1e-12).
    double clipped(std::vector<double> const& x) const;
    bool identically_zero() const;
    //! True when no term involves x_2..x_d.
    bool depends_only_on_x1() const;
    //! True when a(-x_1) = a(x_1) for an x_1-only profile.
    bool even_in_x1() const;
    //! Minimum over an n^d equispaced grid.
    double grid_minimum(int n) const;
    //! Throws unless grid_minimum >= -1e-12 (and a != 0 if required).
    void validate(bool require_nonzero = false) const;
};

}  // namespace randwave::wave
