#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "randwave/common/types.hpp"
#include "randwave/ensembles/rng_stream.hpp"

namespace randwave::ensembles
{

//! Uniform point on the unit sphere of K^N (imaginary parts 0 if real).
CoeffVector sample_sphere_uniform(std::size_t N, Field field, RngStream& rng);

//! Haar-distributed orthogonal (real) or unitary (complex) matrix.
//! Columns form the basis.
Eigen::MatrixXcd sample_haar_basis(std::size_t N, Field field, RngStream& rng);

}  // namespace randwave::ensembles
