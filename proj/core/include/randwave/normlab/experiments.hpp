#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "randwave/common/types.hpp"
#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/geometry/observable.hpp"
#include "randwave/geometry/spectral_block.hpp"

namespace randwave::normlab
{

//! Uniform measure on the unit sphere of one block.
struct BlockEnsemble
{
    geometry::SpectralBlock block;
    Field field = Field::Complex;
};

struct NormSpec
{
    bool sup = false;  //!< L^infinity if set, else L^q
    double q = 2.0;
};

enum class TailMode
{
    Absolute,     //!< P(F > t)
    AroundMedian  //!< P(|F - median| > t)
};

struct TailReport
{
    std::vector<double> thresholds;
    std::vector<double> probability;
    std::vector<double> ci_lo;
    std::vector<double> ci_hi;
    std::vector<double> bound;
    std::size_t samples = 0;
    std::size_t dim = 0;
    double median = 0;
    //! c in 2 exp(-c N^{2/q} t^2), least squares through the origin
    double fitted_c = 0;
    //! beta in -log(P/2) ~ t^beta
    double fitted_power = 0;
    bool fit_ok = false;
};

//! Norm distribution of the block ensemble, trials driven by base.child(i).
std::vector<double> sample_norms(BlockEnsemble const& ensemble,
                                 NormSpec const& norm,
                                 std::size_t trials,
                                 ensembles::RngStream const& base,
                                 unsigned workers);

TailReport tail_experiment(BlockEnsemble const& ensemble,
                           NormSpec const& norm,
                           std::vector<double> const& thresholds,
                           std::size_t trials,
                           ensembles::RngStream const& base,
                           unsigned workers,
                           TailMode mode = TailMode::AroundMedian);

//! |u(x)| at a fixed point for `trials` samples, trial i from base.child(i).
std::vector<double> sample_pointwise(BlockEnsemble const& ensemble,
                                     std::vector<double> const& point,
                                     std::size_t trials,
                                     ensembles::RngStream const& base,
                                     unsigned workers);

//! Tail of |u(x)| at a fixed point against the exact law and the Gaussian
//! bound exp(-(N-1) t^2 / e_x); `bound` holds the exact curve.
TailReport pointwise_tail_experiment(BlockEnsemble const& ensemble,
                                     std::vector<double> const& point,
                                     std::vector<double> const& thresholds,
                                     std::size_t trials,
                                     ensembles::RngStream const& base,
                                     unsigned workers,
                                     std::vector<double>* gaussian_bound = nullptr);

//! Empirical tail probabilities of a precomputed sample.
TailReport tail_from_samples(std::vector<double> values,
                             std::vector<double> const& thresholds,
                             TailMode mode,
                             std::size_t dim,
                             double q);

struct MedianRow
{
    std::size_t dim = 0;
    double median = 0;
    double sqrt_log_n = 0;
    double ratio = 0;
};

struct MedianScalingReport
{
    std::vector<MedianRow> rows;
    double slope = 0;
    double intercept = 0;
    std::vector<double> residuals;
    bool degenerate = false;
    bool monotone = false;
    double band_lo = 0;
    double band_hi = 0;
};

MedianScalingReport linf_median_scaling(std::vector<geometry::SpectralBlock> const& blocks,
                                        Field field,
                                        std::size_t trials,
                                        ensembles::RngStream const& base,
                                        unsigned workers);

struct MomentReport
{
    double q = 0;
    double closed_form = 0;  //!< A_{q,h}
    double mc_mean_pow = 0;  //!< mean of ||u||_q^q
    double mc_mean_pow_stderr = 0;
    double mc_mean = 0;      //!< mean of ||u||_q
    double mc_mean_stderr = 0;
    double mc_median = 0;    //!< lower median of ||u||_q
    double max_l2_defect = 0;  //!< max | ||u||_2 - 1 | over trials
};

MomentReport moment_experiment(BlockEnsemble const& ensemble,
                               double q,
                               std::size_t trials,
                               ensembles::RngStream const& base,
                               unsigned workers);

struct ObservableReport
{
    double mc_mean = 0;
    double mc_stderr = 0;
    double liouville = 0;
    double trace_exact = 0;
};

//! (A u | u) for one coefficient vector of a torus block.
double observable_quadratic_form(geometry::SpectralBlock const& block,
                                 Field field,
                                 geometry::Observable const& obs,
                                 std::span<cplx const> coeffs);

ObservableReport observable_average_experiment(BlockEnsemble const& ensemble,
                                               geometry::Observable const& obs,
                                               std::size_t trials,
                                               ensembles::RngStream const& base,
                                               unsigned workers);

struct TorusGrowthRow
{
    std::int64_t k = 0;
    std::size_t count = 0;  //!< r_d(k)
    double linf = 0;
    double peak_exact = 0;  //!< sqrt(N) / (2 pi)^{d/2}
    double l2 = 0;
    std::vector<double> lr;        //!< ||u||_r for r in the request
    std::vector<double> lr_ratio;  //!< ||u||_r / sqrt(k)^{(d-2)/2 - d/r}
    double linf_ratio = 0;         //!< linf / sqrt(N)
};

struct TorusGrowthReport
{
    std::vector<double> r_values;
    std::vector<TorusGrowthRow> rows;
    std::vector<std::string> notices;
};

//! Peak functions u = N^{-1/2} sum_{|n|^2 = k} e^{i n.x}.
TorusGrowthReport torus_lower_bound_experiment(int d,
                                               std::vector<std::int64_t> const& ks,
                                               std::vector<double> const& r_values);

}  // namespace randwave::normlab
