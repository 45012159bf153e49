#pragma once

#include <cstdint>

namespace randwave
{

// Gamma-family helpers backed by Boost.Math (Lanczos approximation).
double log_gamma(double x);
double gamma_fn(double x);
//! Gamma(a) / Gamma(a + delta) without cancellation for large a.
double gamma_delta_ratio(double a, double delta);

//! Volume of the unit ball in R^d: pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(int d);

//! Surface area of the unit sphere S^d embedded in R^{d+1}.
double sphere_surface_area(int d);

//! Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

//! Regularized incomplete beta I_x(a, b).
double regularized_beta(double x, double a, double b);

}  // namespace randwave
