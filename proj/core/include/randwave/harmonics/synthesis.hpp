#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "randwave/common/types.hpp"
#include "randwave/geometry/spectral_block.hpp"
#include "randwave/harmonics/sphere_grid.hpp"

namespace randwave::harmonics
{

enum class GridKind
{
    Quadrature,  //!< exact for products of band-limit-L fields
    Sup          //!< oversampled grid for sup norms
};

/*!
 * Evaluates u = sum_j z_j e_j on a grid.
 *
 * Torus blocks with Field::Complex use e_n = e^{i n.x}/(2 pi)^{d/2}.
 * With Field::Real the basis is sqrt(2) cos(n.x) at the lexicographically
 * positive member of each +-n pair and sqrt(2) sin(n.x) at its partner.
 * Sphere blocks always use the real harmonics.
 *
 * Immutable after construction and safe to share across threads.
 */
class BlockSynthesizer
{
  public:
    //! `L` < 0 selects the block's own band limit.
    BlockSynthesizer(geometry::SpectralBlock const& block,
                     Field field,
                     GridKind kind,
                     int L = -1);

    std::size_t size() const { return n_points_; }
    std::span<double const> weights() const { return weights_; }
    //! Coordinates of node i: (theta, phi) on S^2, x in [0, 2pi)^d on T^d.
    std::vector<double> point(std::size_t i) const;

    std::vector<cplx> synthesize(std::span<cplx const> coeffs) const;

    geometry::SpectralBlock const& block() const { return block_; }
    Field field() const { return field_; }
    int grid_extent() const { return extent_; }

  private:
    std::vector<cplx> synthesize_sphere(std::span<cplx const> coeffs) const;
    std::vector<cplx> synthesize_torus(std::span<cplx const> coeffs) const;

    geometry::SpectralBlock block_;
    Field field_;
    std::size_t n_points_ = 0;
    std::vector<double> weights_;
    // sphere
    SphereGrid grid_;
    std::vector<double> ring_table_;  // rings x modes
    // torus
    int extent_ = 0;
    std::vector<std::size_t> torus_slot_;
};

//! Complex exponential coefficients of a real-basis torus field.
std::vector<cplx> torus_real_to_complex(geometry::SpectralBlock const& block,
                                        std::span<cplx const> coeffs);

//! Value of every basis function at a point (slow reference path).
std::vector<cplx> eval_block_basis(geometry::SpectralBlock const& block,
                                   Field field,
                                   std::vector<double> const& point);

//! Direct summation at the given points.
std::vector<cplx> synthesize_direct(geometry::SpectralBlock const& block,
                                    Field field,
                                    std::span<cplx const> coeffs,
                                    std::vector<std::vector<double>> const& points);

//! Spectral-function diagonal e_{x,h} = sum_j |e_j(x)|^2.
double kernel_e_xh(geometry::SpectralBlock const& block,
                   std::vector<double> const& point);

}  // namespace randwave::harmonics
