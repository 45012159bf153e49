#pragma once

#include <vector>

#include "randwave/wave/damping.hpp"

namespace randwave::wave
{

//! (1/t) int_0^t a(x + s dir) ds, integrated exactly term by term.
double birkhoff_average(DampingProfile const& damping,
                        std::vector<double> const& x,
                        std::vector<double> const& direction,
                        double t);

//! t -> infinity limit: only terms with k.dir = 0 survive (the mean of a
//! for irrational slopes, the closed-geodesic average for rational ones).
double birkhoff_limit_estimate(DampingProfile const& damping,
                               std::vector<double> const& x,
                               std::vector<double> const& direction);

}  // namespace randwave::wave
