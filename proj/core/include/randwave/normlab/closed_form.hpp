#pragma once

#include <cstddef>

#include "randwave/common/types.hpp"
#include "randwave/geometry/spectral_block.hpp"

namespace randwave::normlab
{

//! E |<a, eps>|^q for a uniform on the unit sphere of K^N, |eps| = 1.
double sphere_coordinate_moment(double q, std::size_t N, Field field);

//! A_{q,h} from N and the profile integral int_M e_{x,h}^{q/2} dx.
double a_qh_from_profile(double q, std::size_t N, double profile_integral, Field field);

//! A_{q,h} for blocks with constant e_{x,h} = N / Vol (sphere and torus).
double a_qh_closed_form(double q,
                        geometry::SpectralBlock const& block,
                        Field field = Field::Complex);

//! N -> infinity limit of A_{q,h} (complex field): Vol^{1/q-1/2} Gamma(q/2+1)^{1/q}.
double a_qh_large_n_limit(double q, double volume);

//! P(|<a, eps>| > t) for a uniform on the unit sphere of K^N.
double sphere_coordinate_tail(double t, std::size_t N, Field field);

}  // namespace randwave::normlab
