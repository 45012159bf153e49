#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "randwave/geometry/manifold.hpp"

namespace randwave::geometry
{

/*!
 * One Laplace eigenmode.
 *
 * Sphere modes are real harmonics Y_{degree, order}; torus modes are
 * exponentials e^{i n.x} / (2 pi)^{d/2} with n = lattice.
 */
struct SpectralMode
{
    int degree = 0;
    int order = 0;
    std::vector<int> lattice;
    double omega = 0;

    friend bool operator==(SpectralMode const&, SpectralMode const&) = default;
};

struct SpectralBlock
{
    ManifoldSpec manifold;
    FrequencyWindow window;
    std::vector<SpectralMode> modes;
    std::vector<std::string> warnings;

    std::size_t dim() const { return modes.size(); }
    bool empty() const { return modes.empty(); }
    //! Largest degree (sphere) or largest |n_i| (torus) in the block.
    int band_limit() const;
    double max_frequency() const;
};

//! Default width constant D for block construction.
inline constexpr double default_block_width = 10.0;

//! All n in Z^d with h|n| in (a, b], lexicographic order.
SpectralBlock torus_modes_in_window(int d,
                                    FrequencyWindow const& window,
                                    double D = default_block_width);

//! Real harmonics on S^2 of every degree k with h sqrt(k(k+1)) in (a, b].
SpectralBlock sphere_modes_in_window(FrequencyWindow const& window,
                                     double D = default_block_width);

//! Single-degree block on S^2; the width condition is not applied.
SpectralBlock sphere_degree_block(int k);

//! Degrees k_lo..k_hi on S^2.
SpectralBlock sphere_degree_range_block(int k_lo, int k_hi);

//! Torus shell |n|^2 = k.
SpectralBlock torus_shell_block(int d, std::int64_t k);

}  // namespace randwave::geometry
