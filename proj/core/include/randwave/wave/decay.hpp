#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/geometry/manifold.hpp"
#include "randwave/wave/damping.hpp"
#include "randwave/wave/line_propagator.hpp"

namespace randwave::wave
{

//! Cutoff used for a block window: ceil(margin * b / h).
int block_cutoff(geometry::FrequencyWindow const& window, double margin = 1.125);

/*!
 * Energies E(U(t) u) at frame times j * frame_dt for random unit-energy
 * data in a real block (u0 and u1 both on the block, uniform on the energy
 * sphere). Needs damping that depends on x_1 only.
 */
class BlockEnergyScanner
{
  public:
    BlockEnergyScanner(DampingProfile const& damping,
                       int d,
                       geometry::FrequencyWindow const& window,
                       int cutoff,
                       double frame_dt);

    std::size_t block_dim() const { return block_dim_; }
    int cutoff() const { return cutoff_; }
    double dt() const { return propagator_.dt(); }
    std::size_t steps_per_frame() const { return steps_; }
    double frame_time(int j) const { return j * static_cast<double>(steps_) * propagator_.dt(); }

    //! energies[j][i] for frames j = 0..frames and trials i (base.child(i)).
    std::vector<std::vector<double>> scan(std::size_t trials,
                                          ensembles::RngStream const& base,
                                          int frames,
                                          unsigned workers) const;

  private:
    int d_;
    int cutoff_;
    std::size_t steps_;
    LinePropagator propagator_;
    std::vector<LineGroup> groups_;
    std::vector<std::vector<Eigen::Index>> block_index_;  // per group
    std::size_t block_dim_ = 0;
    geometry::FrequencyWindow window_;
};

struct DecayRow
{
    double h = 0;
    int cutoff = 0;
    std::size_t block_dim = 0;
    double T = 0;
    double fraction = 0;  //!< fraction of trials with E(U(T) u) < eps
    double ci_lo = 0;
    double ci_hi = 0;
    double mean_energy = 0;
};

std::vector<DecayRow> decay_probability_experiment(std::vector<double> const& hs,
                                                   double a,
                                                   double b,
                                                   DampingProfile const& damping,
                                                   int d,
                                                   double T,
                                                   double eps,
                                                   std::size_t trials,
                                                   ensembles::RngStream const& base,
                                                   unsigned workers);

struct PilotResult
{
    double T = 0;
    bool found = false;
    std::vector<double> times;
    std::vector<std::vector<double>> fractions;  //!< [h][frame]
};

//! Smallest frame time at which every h reaches `target` success fraction.
PilotResult pilot_decay_time(std::vector<double> const& hs,
                             double a,
                             double b,
                             DampingProfile const& damping,
                             int d,
                             double eps,
                             double target,
                             std::size_t trials,
                             ensembles::RngStream const& base,
                             double frame_dt,
                             int max_frames,
                             unsigned workers);

struct LeakageResult
{
    double h = 0;
    double h_prime = 0;
    double t = 0;
    double estimate = 0;   //!< random search + power iteration
    double svd_norm = 0;   //!< exact largest singular value
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
};

//! Energy-norm estimate of Pi_h U(t) i_{h'} between disjoint block windows.
LeakageResult block_leakage(DampingProfile const& damping,
                            int d,
                            geometry::FrequencyWindow const& target,
                            geometry::FrequencyWindow const& source,
                            double t,
                            std::size_t trials,
                            ensembles::RngStream const& base,
                            int cutoff = -1);

//! Step function f with f = 1 before T_0 and 2^{-j/2} on [T_j, T_{j+1}).
struct DecayRate
{
    std::vector<double> T;
    std::vector<double> values;
    std::vector<double> exceedance;  //!< max over blocks at T_j
    std::vector<double> wilson_hi;   //!< upper CI of that exceedance
    bool complete = true;
    std::string flag;

    double operator()(double t) const;
};

DecayRate decay_rate_builder(DampingProfile const& damping,
                             int d,
                             std::vector<geometry::FrequencyWindow> const& blocks,
                             int J,
                             std::size_t trials,
                             ensembles::RngStream const& base,
                             double frame_dt,
                             int max_frames,
                             unsigned workers);

}  // namespace randwave::wave
