#pragma once

#include <cstddef>
#include <vector>

#include "randwave/ensembles/measure.hpp"
#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/normlab/experiments.hpp"

namespace randwave::wave
{

/*!
 * Gauss-Legendre nodes on [0, T] for integrals over the whole real line of
 * even integrands; weights are doubled accordingly. T is the smallest value
 * with int_T^inf <t>^{-delta p} dt <= rel_tail * int_0^T <t>^{-delta p} dt.
 */
struct TimeGrid
{
    std::vector<double> nodes;
    std::vector<double> weights;
    double T = 0;
    double panel_width = 0;
    double kept_mass = 0;   //!< int_0^T <t>^{-delta p}
    double tail_bound = 0;  //!< upper bound on the neglected part
};

TimeGrid spacetime_time_grid(double delta,
                             double p,
                             double omega_max,
                             int nodes_per_panel = 16,
                             double rel_tail = 1e-7);

//! Largest frequency carried by the measure's blocks.
double measure_max_frequency(ensembles::MeasureSpec const& measure);

/*!
 * || <t>^{-delta} cos(t sqrt(-Delta)) u ||_{L^p(R x T^d)} by direct
 * quadrature in time and an FFT grid in space. Torus blocks only.
 */
double weighted_spacetime_norm(ensembles::MeasureSpec const& measure,
                               ensembles::RandomFieldCoeffs const& u,
                               double delta,
                               double p,
                               TimeGrid const& grid);

//! K(omega) = int_R <t>^{-2 delta} cos^2(omega t) dt on the grid.
double spacetime_kernel(TimeGrid const& grid, double delta, double omega);

//! p = 2 norm through sum_n |c_n|^2 K(|n|).
double spectral_spacetime_norm_p2(ensembles::MeasureSpec const& measure,
                                  ensembles::RandomFieldCoeffs const& u,
                                  double delta,
                                  TimeGrid const& grid);

struct SpacetimeTailReport
{
    normlab::TailReport tail;
    TimeGrid grid;
    double delta = 0;
    double p = 0;
    double alpha_norm = 0;
    double mean = 0;
    double sigma = 0;
    //! exponent gamma/(gamma+1) of the large deviation bound
    double predicted_power = 0;
    //! slope of log(-log P) against log lambda over [median, median + 4 sigma]
    double fitted_power = 0;
    std::size_t fit_points = 0;
    bool fit_ok = false;
    //! largest relative gap between the direct and spectral routes (p = 2)
    double route_gap = 0;
    std::size_t route_checks = 0;
};

/*!
 * Tail of the weighted spacetime norm over independent samples of the
 * measure. For p = 2 the samples use the spectral route and the first
 * `route_checks` trials are recomputed by direct quadrature.
 */
SpacetimeTailReport spacetime_tail_experiment(ensembles::MeasureSpec const& measure,
                                              double delta,
                                              double p,
                                              std::size_t trials,
                                              ensembles::RngStream const& base,
                                              unsigned workers,
                                              std::size_t n_thresholds = 24,
                                              std::size_t route_checks = 4);

}  // namespace randwave::wave
