#pragma once

#include <cstddef>
#include <vector>

namespace randwave::harmonics
{

/*!
 * Tensor grid on S^2: rings of constant theta, each with n_phi equispaced
 * azimuths phi_j = 2 pi j / n_phi. Node (i, j) has weight
 * ring_weight[i] * 2 pi / n_phi (zero weights on sup grids).
 */
struct SphereGrid
{
    int L = 0;
    std::vector<double> theta;
    std::vector<double> ring_weight;
    int n_phi = 1;

    //! Gauss-Legendre in cos(theta) with L+1 rings, >= 2L+1 azimuths.
    //! Exact for polynomials of total degree <= 2L.
    static SphereGrid gauss(int L);

    //! Equiangular grid with poles: 4L+1 rings, 8L azimuths.
    static SphereGrid equiangular(int L);

    std::size_t size() const { return theta.size() * static_cast<std::size_t>(n_phi); }
    double phi(int j) const;
    double weight(std::size_t node) const;
    double total_weight() const;
};

}  // namespace randwave::harmonics
