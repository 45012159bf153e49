#pragma once

#include <memory>
#include <span>

#include "randwave/common/types.hpp"
#include "randwave/geometry/spectral_block.hpp"
#include "randwave/harmonics/synthesis.hpp"

namespace randwave::normlab
{

//! (sum_i w_i |u_i|^q)^{1/q}.
double lq_norm(std::span<cplx const> samples, std::span<double const> weights, double q);

//! max_i |u_i|.
double max_abs(std::span<cplx const> samples);

/*!
 * Norm evaluation for one block.
 *
 * The L^q grid is exact for |u|^q when q is an even integer; the sup grid
 * oversamples the band limit, so linf() is a lower bound for the true sup
 * with additive error O(|grad u|_inf * spacing).
 */
class BlockNorms
{
  public:
    BlockNorms(geometry::SpectralBlock const& block, Field field, double q);

    double lq(std::span<cplx const> coeffs) const;
    //! ||u||_q^q on the quadrature grid.
    double lq_pow(std::span<cplx const> coeffs) const;
    double l2(std::span<cplx const> coeffs) const;
    double linf(std::span<cplx const> coeffs) const;

    double q() const { return q_; }
    harmonics::BlockSynthesizer const& quadrature() const { return *lq_grid_; }
    harmonics::BlockSynthesizer const& sup_grid() const { return *sup_grid_; }

  private:
    double q_;
    std::shared_ptr<harmonics::BlockSynthesizer> lq_grid_;
    std::shared_ptr<harmonics::BlockSynthesizer> sup_grid_;
};

//! Grid sup of |u| for a block field.
double linf_norm(geometry::SpectralBlock const& block, Field field, std::span<cplx const> coeffs);

}  // namespace randwave::normlab
