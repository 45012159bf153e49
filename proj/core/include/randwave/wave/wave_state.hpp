#pragma once

#include <cstddef>
#include <vector>

#include "randwave/common/types.hpp"

namespace randwave::wave
{

/*!
 * Coefficients of (u, d_t u) on T^d against e^{i n.x} / (2 pi)^{d/2} for
 * |n| <= cutoff, stored on the box [-cutoff, cutoff]^d (row-major, last axis
 * fastest). Entries outside the disk stay zero.
 */
struct WaveState
{
    int d = 1;
    int cutoff = 0;
    std::vector<cplx> u0;
    std::vector<cplx> u1;
    double t = 0;

    static WaveState zeros(int d, int cutoff);

    int extent() const { return 2 * cutoff + 1; }
    std::size_t size() const { return u0.size(); }
    std::size_t index(std::vector<int> const& n) const;
    std::vector<int> lattice(std::size_t idx) const;
    double omega(std::size_t idx) const;
    bool in_disk(std::size_t idx) const;
};

//! (1/2) sum (|n|^2 |u0_n|^2 + |u1_n|^2); the zero mode of u0 drops out.
double energy(WaveState const& s);

//! Exact free flow over time t.
WaveState free_propagator(WaveState s, double t);

//! Free flow applied in place, mode by mode.
void free_rotate(WaveState& s, double t);

}  // namespace randwave::wave
