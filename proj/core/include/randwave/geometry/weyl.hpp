#pragma once

#include <cstdint>

#include "randwave/geometry/manifold.hpp"

namespace randwave::geometry
{

//! Exact #{j : omega_j <= lambda}, with multiplicity.
std::uint64_t weyl_count(ManifoldSpec const& manifold, double lambda);

//! Leading Weyl term c_d Vol(M) lambda^d / (2 pi)^d.
double weyl_prediction(ManifoldSpec const& manifold, double lambda);

}  // namespace randwave::geometry
