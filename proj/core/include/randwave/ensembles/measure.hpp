#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "randwave/common/types.hpp"
#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/geometry/spectral_block.hpp"

namespace randwave::ensembles
{

enum class RadialKind
{
    Dirac,
    HalfGaussian
};

//! Radial law p_k on [0, inf).
struct RadialLaw
{
    RadialKind kind = RadialKind::HalfGaussian;
    double r0 = 1.0;  //!< atom location for Dirac

    static RadialLaw dirac(double r0);
    static RadialLaw half_gaussian();

    //! Tail class gamma: infinity for Dirac, 2 for the half-Gaussian.
    double tail_gamma() const;
    //! Declared constants of P(r > rho) <= C exp(-c rho^gamma).
    double tail_C() const { return 1.0; }
    double tail_c() const { return 0.5; }
    double second_moment() const;
    double sample(RngStream& rng) const;

    friend bool operator==(RadialLaw const&, RadialLaw const&) = default;
};

//! Product measure over blocks E_k; block k has scale a_k, weight alpha_k.
struct MeasureSpec
{
    std::vector<geometry::SpectralBlock> blocks;
    std::vector<double> scales;
    std::vector<double> alpha;
    std::vector<RadialLaw> laws;
    double s = 0.0;
    Field field = Field::Real;

    std::size_t num_blocks() const { return blocks.size(); }
    void validate() const;
    //! ||(alpha_k)||_s^2 = sum alpha_k^2 (1 + a_k^2)^s.
    double alpha_norm_sq() const;
};

//! Dyadic torus blocks 2^{k-1} < |n| <= 2^k, a_k = 2^k, k = 0..K.
MeasureSpec dyadic_torus_measure(int d,
                                 int K,
                                 std::vector<double> alpha,
                                 RadialLaw law,
                                 double s = 0.0,
                                 Field field = Field::Real);

//! Per-block coefficient vectors of one sample.
struct RandomFieldCoeffs
{
    std::vector<CoeffVector> blocks;

    double l2_norm_sq() const;
};

//! r alpha omega with r ~ law and omega uniform on the unit sphere of K^N.
CoeffVector sample_block_field(std::size_t N,
                               double alpha,
                               RadialLaw const& law,
                               Field field,
                               RngStream& rng);

//! Independent blocks k = 0..K_max-1 (finite truncation of the product).
RandomFieldCoeffs sample_full_field(MeasureSpec const& measure, RngStream& rng);

//! Block-weighted sum sum_k (1 + a_k^2)^s ||u_k||^2.
double sobolev_norm(RandomFieldCoeffs const& u,
                    std::span<double const> scales,
                    double s);

}  // namespace randwave::ensembles
