#include "randwave/normlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "randwave/common/parallel.hpp"
#include "randwave/common/stats.hpp"
#include "randwave/ensembles/samplers.hpp"
#include "randwave/geometry/manifold.hpp"
#include "randwave/harmonics/synthesis.hpp"
#include "randwave/normlab/closed_form.hpp"
#include "randwave/normlab/norms.hpp"

namespace randwave::normlab
{
using ensembles::RngStream;
using geometry::SpectralBlock;

std::vector<double> sample_norms(BlockEnsemble const& ensemble,
                                 NormSpec const& norm,
                                 std::size_t trials,
                                 RngStream const& base,
                                 unsigned workers)
{
    RANDWAVE_REQUIRE(!ensemble.block.empty(), "sample_norms: empty block");
    BlockNorms const norms(ensemble.block, ensemble.field, norm.sup ? 2.0 : norm.q);
    std::size_t const N = ensemble.block.dim();
    std::vector<double> values(trials);
    parallel_for(trials, workers, [&](std::size_t i) {
        RngStream rng = base.child(i);
        auto z = ensembles::sample_sphere_uniform(N, ensemble.field, rng);
        values[i] = norm.sup ? norms.linf(z) : norms.lq(z);
    });
    return values;
}

TailReport tail_from_samples(std::vector<double> values,
                             std::vector<double> const& thresholds,
                             TailMode mode,
                             std::size_t dim,
                             double q)
{
    RANDWAVE_REQUIRE(!values.empty(), "tail: empty sample");
    TailReport r;
    r.samples = values.size();
    r.dim = dim;
    r.median = lower_median(values);
    if (mode == TailMode::AroundMedian)
        for (double& v : values)
            v = std::abs(v - r.median);
    std::sort(values.begin(), values.end());

    double const scale = std::pow(static_cast<double>(dim), 2.0 / q);
    std::vector<double> fx, fy, lx, ly;
    for (double t : thresholds)
    {
        auto above = static_cast<std::size_t>(
            values.end() - std::upper_bound(values.begin(), values.end(), t));
        double p = static_cast<double>(above) / static_cast<double>(values.size());
        auto ci = wilson_interval(above, values.size());
        r.thresholds.push_back(t);
        r.probability.push_back(p);
        r.ci_lo.push_back(ci.lo);
        r.ci_hi.push_back(ci.hi);
        if (above >= 5 && p < 1.0 && t > 0)
        {
            double y = -std::log(p / 2.0);
            fx.push_back(scale * t * t);
            fy.push_back(y);
            lx.push_back(std::log(t));
            ly.push_back(std::log(y));
        }
    }
    if (fx.size() >= 2)
    {
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < fx.size(); ++i)
        {
            sxy += fx[i] * fy[i];
            sxx += fx[i] * fx[i];
        }
        r.fitted_c = sxy / sxx;
        auto fit = least_squares(lx, ly);
        r.fitted_power = fit.slope;
        r.fit_ok = !fit.degenerate;
    }
    for (double t : r.thresholds)
        r.bound.push_back(std::min(1.0, 2.0 * std::exp(-r.fitted_c * scale * t * t)));
    return r;
}

TailReport tail_experiment(BlockEnsemble const& ensemble,
                           NormSpec const& norm,
                           std::vector<double> const& thresholds,
                           std::size_t trials,
                           RngStream const& base,
                           unsigned workers,
                           TailMode mode)
{
    RANDWAVE_REQUIRE(trials >= 100, "tail_experiment: trials must be >= 100");
    auto values = sample_norms(ensemble, norm, trials, base, workers);
    double q = norm.sup ? std::numeric_limits<double>::infinity() : norm.q;
    return tail_from_samples(std::move(values), thresholds, mode, ensemble.block.dim(), q);
}

std::vector<double> sample_pointwise(BlockEnsemble const& ensemble,
                                     std::vector<double> const& point,
                                     std::size_t trials,
                                     RngStream const& base,
                                     unsigned workers)
{
    auto const& block = ensemble.block;
    auto basis = harmonics::eval_block_basis(block, ensemble.field, point);
    std::size_t const N = block.dim();
    std::vector<double> values(trials);
    parallel_for(trials, workers, [&](std::size_t i) {
        RngStream rng = base.child(i);
        auto z = ensembles::sample_sphere_uniform(N, ensemble.field, rng);
        cplx u = 0;
        for (std::size_t j = 0; j < N; ++j)
            u += z[j] * basis[j];
        values[i] = std::abs(u);
    });
    return values;
}

TailReport pointwise_tail_experiment(BlockEnsemble const& ensemble,
                                     std::vector<double> const& point,
                                     std::vector<double> const& thresholds,
                                     std::size_t trials,
                                     RngStream const& base,
                                     unsigned workers,
                                     std::vector<double>* gaussian_bound)
{
    RANDWAVE_REQUIRE(trials >= 100, "tail_experiment: trials must be >= 100");
    double const e_x = harmonics::kernel_e_xh(ensemble.block, point);
    std::size_t const N = ensemble.block.dim();
    auto values = sample_pointwise(ensemble, point, trials, base, workers);
    auto r = tail_from_samples(std::move(values), thresholds, TailMode::Absolute, N, 2.0);
    r.bound.clear();
    for (double t : r.thresholds)
    {
        r.bound.push_back(sphere_coordinate_tail(t / std::sqrt(e_x), N, ensemble.field));
        if (gaussian_bound)
            gaussian_bound->push_back(std::exp(-(static_cast<double>(N) - 1) * t * t / e_x));
    }
    return r;
}

MedianScalingReport linf_median_scaling(std::vector<SpectralBlock> const& blocks,
                                        Field field,
                                        std::size_t trials,
                                        RngStream const& base,
                                        unsigned workers)
{
    MedianScalingReport rep;
    std::vector<double> x, y;
    for (std::size_t b = 0; b < blocks.size(); ++b)
    {
        BlockEnsemble ens{blocks[b], field};
        auto values = sample_norms(ens, {true, 2.0}, trials, base.child(b), workers);
        MedianRow row;
        row.dim = blocks[b].dim();
        row.median = lower_median(values);
        row.sqrt_log_n = std::sqrt(std::log(static_cast<double>(row.dim)));
        row.ratio = row.sqrt_log_n > 0 ? row.median / row.sqrt_log_n : 0.0;
        rep.rows.push_back(row);
        x.push_back(row.sqrt_log_n);
        y.push_back(row.median);
    }
    auto fit = least_squares(x, y);
    rep.slope = fit.slope;
    rep.intercept = fit.intercept;
    rep.residuals = fit.residuals;
    rep.degenerate = fit.degenerate || blocks.size() < 4;
    rep.monotone = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        rep.monotone = rep.monotone && rep.rows[i].median > rep.rows[i - 1].median;
    if (!rep.rows.empty())
    {
        rep.band_lo = rep.band_hi = rep.rows[0].ratio;
        for (auto const& row : rep.rows)
        {
            rep.band_lo = std::min(rep.band_lo, row.ratio);
            rep.band_hi = std::max(rep.band_hi, row.ratio);
        }
    }
    return rep;
}

MomentReport moment_experiment(BlockEnsemble const& ensemble,
                               double q,
                               std::size_t trials,
                               RngStream const& base,
                               unsigned workers)
{
    RANDWAVE_REQUIRE(trials >= 2, "moment_experiment: need at least two trials");
    BlockNorms const norms(ensemble.block, ensemble.field, q);
    BlockNorms const l2norms(ensemble.block, ensemble.field, 2.0);
    std::size_t const N = ensemble.block.dim();
    std::vector<double> pows(trials), defects(trials);
    parallel_for(trials, workers, [&](std::size_t i) {
        RngStream rng = base.child(i);
        auto z = ensembles::sample_sphere_uniform(N, ensemble.field, rng);
        pows[i] = norms.lq_pow(z);
        defects[i] = std::abs(l2norms.l2(z) - 1.0);
    });
    MomentReport r;
    r.q = q;
    r.closed_form = a_qh_closed_form(q, ensemble.block, ensemble.field);
    auto ms = mean_stderr(pows);
    r.mc_mean_pow = ms.mean;
    r.mc_mean_pow_stderr = ms.stderr_;
    std::vector<double> norm_values(trials);
    for (std::size_t i = 0; i < trials; ++i)
        norm_values[i] = std::pow(pows[i], 1.0 / q);
    auto mn = mean_stderr(norm_values);
    r.mc_mean = mn.mean;
    r.mc_mean_stderr = mn.stderr_;
    r.mc_median = lower_median(norm_values);
    r.max_l2_defect = *std::max_element(defects.begin(), defects.end());
    return r;
}

namespace
{
bool is_zero(std::vector<int> const& k)
{
    return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}
}  // namespace

double observable_quadratic_form(SpectralBlock const& block,
                                 Field field,
                                 geometry::Observable const& obs,
                                 std::span<cplx const> coeffs)
{
    RANDWAVE_REQUIRE(coeffs.size() == block.dim(), "observable: dimension mismatch");
    if (auto const* b = std::get_if<geometry::RadialMultiplier>(&obs))
    {
        double s = 0;
        for (std::size_t j = 0; j < block.dim(); ++j)
            s += (*b)(block.window.h * block.modes[j].omega) * std::norm(coeffs[j]);
        return s;
    }
    auto const& a = std::get<geometry::Multiplication>(obs).a;
    RANDWAVE_REQUIRE(block.manifold.kind == geometry::ManifoldKind::Torus,
                     "multiplication observables are supported on tori only");
    RANDWAVE_REQUIRE(a.d == block.manifold.d, "observable dimension mismatch");
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    if (field == Field::Real)
        c = harmonics::torus_real_to_complex(block, coeffs);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t j = 0; j < block.dim(); ++j)
        index.emplace(block.modes[j].lattice, j);

    // sum_n conj(c_n) c_{n - shift}
    auto correlate = [&](std::vector<int> const& shift) {
        cplx acc = 0;
        std::vector<int> m(shift.size());
        for (std::size_t j = 0; j < block.dim(); ++j)
        {
            auto const& n = block.modes[j].lattice;
            for (std::size_t i = 0; i < n.size(); ++i)
                m[i] = n[i] - shift[i];
            if (auto it = index.find(m); it != index.end())
                acc += std::conj(c[j]) * c[it->second];
        }
        return acc;
    };
    cplx total = 0;
    for (auto const& term : a.terms)
    {
        if (is_zero(term.k))
        {
            total += term.cos_coeff * correlate(term.k);
            continue;
        }
        std::vector<int> neg(term.k.size());
        for (std::size_t i = 0; i < neg.size(); ++i)
            neg[i] = -term.k[i];
        cplx plus{0.5 * term.cos_coeff, -0.5 * term.sin_coeff};
        cplx minus{0.5 * term.cos_coeff, 0.5 * term.sin_coeff};
        total += plus * correlate(term.k) + minus * correlate(neg);
    }
    return total.real();
}

ObservableReport observable_average_experiment(BlockEnsemble const& ensemble,
                                               geometry::Observable const& obs,
                                               std::size_t trials,
                                               RngStream const& base,
                                               unsigned workers)
{
    auto const& block = ensemble.block;
    RANDWAVE_REQUIRE(!block.empty(), "observable experiment: empty block");
    std::size_t const N = block.dim();
    std::vector<double> values(trials);
    parallel_for(trials, workers, [&](std::size_t i) {
        RngStream rng = base.child(i);
        auto z = ensembles::sample_sphere_uniform(N, ensemble.field, rng);
        values[i] = observable_quadratic_form(block, ensemble.field, obs, z);
    });
    ObservableReport r;
    auto ms = mean_stderr(values);
    r.mc_mean = ms.mean;
    r.mc_stderr = ms.stderr_;
    r.liouville = geometry::liouville_average(obs, block.window, block.manifold.d);
    if (auto const* b = std::get_if<geometry::RadialMultiplier>(&obs))
    {
        double s = 0;
        for (auto const& m : block.modes)
            s += (*b)(block.window.h * m.omega);
        r.trace_exact = s / static_cast<double>(N);
    }
    else
    {
        // diagonal entries (a e_n | e_n) all equal the mean of a
        r.trace_exact = std::get<geometry::Multiplication>(obs).a.mean();
    }
    return r;
}

TorusGrowthReport torus_lower_bound_experiment(int d,
                                               std::vector<std::int64_t> const& ks,
                                               std::vector<double> const& r_values)
{
    RANDWAVE_REQUIRE(d >= 2, "torus_lower_bound_experiment: d must be >= 2");
    TorusGrowthReport rep;
    rep.r_values = r_values;
    for (std::int64_t k : ks)
    {
        std::uint64_t count = geometry::representation_count(d, k);
        if (count == 0)
        {
            rep.notices.push_back("k=" + std::to_string(k) + " skipped: r_d(k) = 0");
            continue;
        }
        auto block = geometry::torus_shell_block(d, k);
        std::size_t const N = block.dim();
        std::vector<cplx> z(N, cplx{1.0 / std::sqrt(static_cast<double>(N)), 0.0});
        TorusGrowthRow row;
        row.k = k;
        row.count = N;
        row.peak_exact = std::sqrt(static_cast<double>(N)) * std::pow(two_pi, -0.5 * d);
        BlockNorms const base_norms(block, Field::Complex, 2.0);
        row.l2 = base_norms.l2(z);
        row.linf = base_norms.linf(z);
        row.linf_ratio = row.linf / std::sqrt(static_cast<double>(N));
        double const lambda = std::sqrt(static_cast<double>(k));
        for (double r : r_values)
        {
            BlockNorms const nr(block, Field::Complex, r);
            double v = nr.lq(z);
            row.lr.push_back(v);
            row.lr_ratio.push_back(v / std::pow(lambda, 0.5 * (d - 2) - d / r));
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace randwave::normlab
