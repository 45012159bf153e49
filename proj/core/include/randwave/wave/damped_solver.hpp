#pragma once

#include <cstddef>
#include <vector>

#include "randwave/wave/damping.hpp"
#include "randwave/wave/wave_state.hpp"

namespace randwave::wave
{

/*!
 * Strang splitting for u'' - Lap u + 2 a u' = 0 on T^d:
 * free half-step, u' <- e^{-2 a dt} u' on a padded physical grid followed by
 * truncation to |n| <= cutoff, free half-step.
 */
class DampedWaveSolver
{
  public:
    DampedWaveSolver(DampingProfile const& damping, int d, int cutoff, double dt);

    double dt() const { return dt_; }
    int grid_size() const { return grid_; }
    void step(WaveState& s) const;
    //! int_M 2 a |d_t u|^2 dx at the current state.
    double dissipation_rate(WaveState const& s) const;

  private:
    void half_rotate(WaveState& s) const;
    std::vector<cplx> to_grid(std::vector<cplx> const& coeffs) const;

    int d_;
    int cutoff_;
    double dt_;
    int grid_;
    bool undamped_;
    std::vector<double> omega_;
    std::vector<double> cos_half_, sin_half_;
    std::vector<double> decay_;    // e^{-2 a dt} on the grid
    std::vector<double> a_grid_;   // a on the grid
    std::vector<std::size_t> slot_;  // box index -> grid index
};

//! Smallest padded grid used for the damping product.
int damping_grid_size(int cutoff);

struct Trajectory
{
    std::vector<double> times;
    std::vector<WaveState> states;
    std::vector<double> energies;
    std::vector<double> dissipation_rates;
};

//! Evolves to t_final with n = ceil(t_final / dt) equal steps (dt shrinks to
//! fit). Stores every `store_every`-th state plus the last.
//! Rejects dt > 0.5 / cutoff.
Trajectory damped_evolve(WaveState const& initial,
                         DampingProfile const& damping,
                         double t_final,
                         double dt,
                         std::size_t store_every = 1);

//! |E(0) - E(T) - int_0^T int 2 a |d_t u|^2| with the trapezoid rule over
//! the stored states.
double dissipation_residual(Trajectory const& trajectory);

}  // namespace randwave::wave
