#include "kinds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "randwave/common/stats.hpp"
#include "randwave/ensembles/kakutani.hpp"
#include "randwave/ensembles/moments.hpp"
#include "randwave/ensembles/samplers.hpp"
#include "randwave/experiment/support.hpp"
#include "randwave/geometry/observable.hpp"
#include "randwave/harmonics/sphere_harmonics.hpp"
#include "randwave/harmonics/synthesis.hpp"
#include "randwave/normlab/closed_form.hpp"
#include "randwave/normlab/experiments.hpp"
#include "randwave/wave/decay.hpp"
#include "randwave/wave/spacetime.hpp"

namespace randwave::experiment::detail
{
namespace
{
using ensembles::RngStream;
using geometry::FrequencyWindow;
using geometry::SpectralBlock;

std::string num(double v)
{
    return format_number(v);
}

struct Sink
{
    ResultRecord& rec;

    void row(std::string metric, std::string p1, std::string p2, double v, double lo, double hi)
    {
        rec.rows.push_back({std::move(metric), std::move(p1), std::move(p2), v, lo, hi});
    }
    void row(std::string metric, std::string p1, std::string p2, double v)
    {
        row(std::move(metric), std::move(p1), std::move(p2), v, v, v);
    }
    //! mean with a 1.96 stderr band
    void mean_row(std::string metric, std::string p1, std::string p2, double mean, double se)
    {
        row(std::move(metric), std::move(p1), std::move(p2), mean, mean - 1.96 * se, mean + 1.96 * se);
    }
    void check(bool ok, std::string const& what)
    {
        if (!ok)
            rec.failures.push_back(what);
    }
};

Field field_of(ExperimentConfig const& c)
{
    return c.text("field") == "real" ? Field::Real : Field::Complex;
}

SpectralBlock block_of(ExperimentConfig const& c, std::vector<std::string>& notes)
{
    SpectralBlock block;
    if (c.text("manifold") == "sphere")
        block = geometry::sphere_degree_block(static_cast<int>(c.integer("degree")));
    else
        block = geometry::torus_modes_in_window(static_cast<int>(c.integer("d")),
                                                {c.number("h"), c.number("a"), c.number("b")});
    notes.insert(notes.end(), block.warnings.begin(), block.warnings.end());
    return block;
}

std::string block_label(SpectralBlock const& b)
{
    return b.manifold.name() + "(N=" + std::to_string(b.dim()) + ")";
}

wave::DampingProfile damping_of(ExperimentConfig const& c, int d)
{
    auto const kind = c.text("damping");
    if (kind == "zero")
        return wave::DampingProfile::zero(d);
    if (kind == "constant")
        return wave::DampingProfile::constant(d, c.number("a0"));
    return wave::DampingProfile::strip(d, c.number("a0"), static_cast<int>(c.integer("power")));
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

void tail_rows(Sink& s, normlab::TailReport const& r, std::string const& label)
{
    for (std::size_t i = 0; i < r.thresholds.size(); ++i)
    {
        s.row("tail_probability", num(r.thresholds[i]), label, r.probability[i], r.ci_lo[i], r.ci_hi[i]);
        if (i < r.bound.size())
            s.row("tail_bound", num(r.thresholds[i]), label, r.bound[i]);
    }
    s.row("median", label, "", r.median);
    s.row("fitted_c", label, "", r.fitted_c);
    s.row("fitted_power", label, "", r.fitted_power);
}

void run_tails(ExperimentConfig const& c, unsigned workers, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    normlab::BlockEnsemble ens{block_of(c, rec.notes), field_of(c)};
    auto const label = block_label(ens.block);
    auto thresholds = c.numbers("thresholds");
    if (c.text("statistic") == "point")
    {
        auto const point = c.numbers("point");
        auto values = normlab::sample_pointwise(ens, point, c.trials, base, workers);
        double const e_x = harmonics::kernel_e_xh(ens.block, point);
        std::size_t const N = ens.block.dim();
        if (thresholds.empty())
            thresholds = linspace(0.0, 3.0 * lower_median(values), 16);
        auto cdf = [&](double t) { return 1.0 - normlab::sphere_coordinate_tail(t / std::sqrt(e_x), N, ens.field); };
        double const ks = ks_distance(values, cdf);
        auto rep = normlab::tail_from_samples(values, thresholds, normlab::TailMode::Absolute, N, 2.0);
        rep.bound.clear();
        for (double t : rep.thresholds)
            rep.bound.push_back(normlab::sphere_coordinate_tail(t / std::sqrt(e_x), N, ens.field));
        tail_rows(s, rep, label);
        s.row("ks_distance", label, "", ks);
        s.row("e_xh", label, "", e_x);
        rec.summary["ks_distance"] = ks;
        return;
    }
    double const q = c.number("q");
    normlab::NormSpec norm{std::isinf(q), std::isinf(q) ? 2.0 : q};
    auto const mode = c.text("mode") == "median" ? normlab::TailMode::AroundMedian : normlab::TailMode::Absolute;
    auto values = normlab::sample_norms(ens, norm, c.trials, base, workers);
    if (thresholds.empty())
    {
        double const med = lower_median(values);
        double top = 0;
        for (double v : values)
            top = std::max(top, mode == normlab::TailMode::AroundMedian ? std::abs(v - med) : v);
        thresholds = linspace(0.0, top, 16);
    }
    auto rep = normlab::tail_from_samples(values, thresholds, mode, ens.block.dim(), q);
    tail_rows(s, rep, label);
}

void run_medians(ExperimentConfig const& c, unsigned workers, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    Field const field = field_of(c);
    std::vector<SpectralBlock> blocks;
    if (c.text("manifold") == "sphere")
        for (auto k : c.integers("degrees"))
            blocks.push_back(geometry::sphere_degree_block(static_cast<int>(k)));
    else
        for (double h : c.numbers("hs"))
            blocks.push_back(geometry::torus_modes_in_window(static_cast<int>(c.integer("d")),
                                                             {h, c.number("a"), c.number("b")}));
    RANDWAVE_REQUIRE(!blocks.empty(), "medians: empty block list");
    double const q = c.number("q");
    if (std::isinf(q))
    {
        auto rep = normlab::linf_median_scaling(blocks, field, c.trials, base, workers);
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
        {
            auto const label = block_label(blocks[i]);
            s.row("mc_median", label, "inf", rep.rows[i].median);
            s.row("median_over_sqrt_log_n", label, "inf", rep.rows[i].ratio);
        }
        s.row("band_ratio", "", "", rep.band_lo > 0 ? rep.band_hi / rep.band_lo : 0.0);
        s.row("monotone", "", "", rep.monotone ? 1.0 : 0.0);
        s.row("fit_slope", "", "", rep.slope);
        rec.summary["monotone"] = rep.monotone;
        return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
    {
        auto const label = block_label(blocks[i]);
        auto rep = normlab::moment_experiment({blocks[i], field}, q, c.trials, base.child(i), workers);
        s.row("closed_form_A_qh", label, num(q), rep.closed_form);
        s.row("closed_form_A_qh_pow", label, num(q), std::pow(rep.closed_form, q));
        s.mean_row("mc_mean_pow", label, num(q), rep.mc_mean_pow, rep.mc_mean_pow_stderr);
        s.mean_row("mc_mean", label, num(q), rep.mc_mean, rep.mc_mean_stderr);
        s.row("mc_median", label, num(q), rep.mc_median);
        s.row("max_l2_defect", label, "", rep.max_l2_defect);
        s.check(rep.max_l2_defect <= 1e-8, "L2 norm of unit coefficients drifted from 1 on " + label);
        if (q == 2.0)
            s.check(std::abs(rep.closed_form - 1.0) <= 1e-12, "A_2 differs from 1 on " + label);
    }
}

void run_defect(ExperimentConfig const& c, unsigned workers, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    int const d = static_cast<int>(c.integer("d"));
    geometry::Observable obs;
    if (c.text("observable") == "cos")
    {
        geometry::TrigSeries a;
        a.d = d;
        std::vector<int> k(static_cast<std::size_t>(d), 0);
        k[0] = 1;
        a.terms.push_back({k, 1.0, 0.0});
        obs = geometry::Multiplication{a};
    }
    else
        obs = geometry::RadialMultiplier{{0.0, 4.0}, {0.0, 4.0}};

    auto const hs = c.numbers("hs");
    std::vector<double> xs, traces;
    double liouville = 0;
    for (std::size_t i = 0; i < hs.size(); ++i)
    {
        FrequencyWindow w{hs[i], c.number("a"), c.number("b")};
        normlab::BlockEnsemble ens{geometry::torus_modes_in_window(d, w), field_of(c)};
        auto rep = normlab::observable_average_experiment(ens, obs, c.trials, base.child(i), workers);
        auto const h = num(hs[i]);
        s.mean_row("mc_mean", h, "", rep.mc_mean, rep.mc_stderr);
        s.row("trace_exact", h, "", rep.trace_exact);
        s.row("liouville", h, "", rep.liouville);
        s.row("mc_minus_trace", h, "", rep.mc_mean - rep.trace_exact, -4 * rep.mc_stderr, 4 * rep.mc_stderr);
        xs.push_back(hs[i]);
        traces.push_back(rep.trace_exact);
        liouville = rep.liouville;
    }
    if (xs.size() >= 2)
    {
        auto fit = least_squares(xs, traces);
        s.row("trace_extrapolated", "0", "", fit.intercept);
        s.row("extrapolation_gap", "0", "", std::abs(fit.intercept - liouville));
    }
}

void run_sphere_basis(ExperimentConfig const& c, unsigned, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    Field const field = field_of(c);
    auto const points = static_cast<std::size_t>(c.integer("points"));
    auto const degrees = c.integers("degrees");
    for (std::size_t b = 0; b < degrees.size(); ++b)
    {
        int const k = static_cast<int>(degrees[b]);
        RANDWAVE_REQUIRE(k >= 0, "sphere-basis: degrees must be >= 0");
        auto const N = static_cast<std::size_t>(2 * k + 1);
        double const expected = (2.0 * k + 1.0) / (4.0 * pi);
        double ortho = 0, addition = 0, addition_rotated = 0;
        RngStream const stream = base.child(b);
        for (std::size_t trial = 0; trial < c.trials; ++trial)
        {
            RngStream rng = stream.child(trial);
            Eigen::MatrixXcd Q = ensembles::sample_haar_basis(N, field, rng);
            Eigen::MatrixXcd G = Q.adjoint() * Q - Eigen::MatrixXcd::Identity(Q.cols(), Q.cols());
            ortho = std::max(ortho, G.cwiseAbs().maxCoeff());
            RngStream prng = rng.child(1);
            for (std::size_t p = 0; p < points; ++p)
            {
                double const theta = std::acos(1.0 - 2.0 * prng.uniform());
                double const phi = two_pi * prng.uniform();
                auto y = harmonics::eval_basis(k, theta, phi);
                Eigen::VectorXcd yv(static_cast<Eigen::Index>(N));
                double plain = 0;
                for (std::size_t j = 0; j < N; ++j)
                {
                    yv(static_cast<Eigen::Index>(j)) = y[j];
                    plain += y[j] * y[j];
                }
                double const rotated = (Q.transpose() * yv).squaredNorm();
                addition = std::max(addition, std::abs(plain - expected) / expected);
                addition_rotated = std::max(addition_rotated, std::abs(rotated - expected) / expected);
            }
        }
        auto const label = std::to_string(k);
        s.row("dim", label, "", static_cast<double>(N));
        s.row("orthonormality_error", label, "", ortho);
        s.row("addition_error", label, "standard", addition);
        s.row("addition_error", label, "haar", addition_rotated);
        s.check(ortho <= 1e-10, "Haar basis not orthonormal at degree " + label);
        s.check(addition <= 1e-8, "addition theorem fails at degree " + label);
        s.check(addition_rotated <= 1e-8, "addition theorem fails for a Haar basis at degree " + label);
    }
}

void run_torus_growth(ExperimentConfig const& c, unsigned, RngStream const&, ResultRecord& rec)
{
    Sink s{rec};
    auto rep = normlab::torus_lower_bound_experiment(static_cast<int>(c.integer("d")), c.integers("ks"), c.numbers("r"));
    rec.notes.insert(rec.notes.end(), rep.notices.begin(), rep.notices.end());
    for (auto const& row : rep.rows)
    {
        auto const k = std::to_string(row.k);
        s.row("count", k, "", static_cast<double>(row.count));
        s.row("linf", k, "", row.linf);
        s.row("peak_exact", k, "", row.peak_exact);
        s.row("linf_over_sqrt_n", k, "", row.linf_ratio);
        s.row("l2", k, "", row.l2);
        for (std::size_t i = 0; i < rep.r_values.size(); ++i)
        {
            s.row("lr", k, num(rep.r_values[i]), row.lr[i]);
            s.row("lr_ratio", k, num(rep.r_values[i]), row.lr_ratio[i]);
        }
        s.check(std::abs(row.l2 - 1.0) <= 1e-10, "peak function not L2-normalized at k=" + k);
        s.check(std::abs(row.linf - row.peak_exact) <= 1e-9 * row.peak_exact, "peak value mismatch at k=" + k);
    }
}

void run_kakutani(ExperimentConfig const& c, unsigned workers, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    auto const K = c.integer("K");
    RANDWAVE_REQUIRE(K >= 1, "kakutani: K must be >= 1");
    auto const law = c.text("law") == "dirac" ? ensembles::RadialLaw::dirac(1.0)
                                                : ensembles::RadialLaw::half_gaussian();
    auto const scenario = c.text("scenario");
    std::vector<ensembles::ScaledLaw> s1, s2;
    for (std::int64_t k = 1; k <= K; ++k)
    {
        double const a1 = 1.0 / static_cast<double>(k);
        double a2 = a1;
        if (scenario == "ratio")
            a2 = a1 * (1.0 + 1.0 / static_cast<double>(k));
        else if (scenario == "doubled")
            a2 = 2.0 * a1;
        s1.push_back({law, a1});
        s2.push_back({law, a2});
    }
    auto res = ensembles::kakutani_product(s1, s2);
    auto const verdict = ensembles::to_string(res.verdict);
    s.row("partial_product", scenario, std::to_string(K), res.partial_product);
    s.row("tail_sum", scenario, std::to_string(K), res.tail_sum);
    s.row("verdict", scenario, verdict, res.partial_product);
    rec.summary["verdict"] = verdict;
    rec.summary["partial_product"] = res.partial_product;
    rec.summary["tail_sum"] = res.tail_sum;
    if (!res.note.empty())
        rec.notes.push_back(res.note);
    if (scenario == "identical")
        s.check(res.partial_product == 1.0, "identical specs must give product 1");

    // support smoke test on a small dyadic torus measure
    int const Kd = 4;
    std::vector<double> alpha;
    for (int k = 0; k <= Kd; ++k)
        alpha.push_back(c.number("support_alpha") * std::ldexp(1.0, -k));
    bool const outside = c.text("support_target") == "outside";
    if (outside)
        alpha.back() = 0.0;
    auto measure = ensembles::dyadic_torus_measure(1, Kd, alpha, law, 0.0, Field::Real);
    ensembles::RandomFieldCoeffs target;
    for (auto const& b : measure.blocks)
        target.blocks.emplace_back(b.dim(), cplx{});
    if (outside)
        target.blocks.back()[0] = 1.0;
    double const radius = c.number("support_radius");
    auto sup = support_smoke_test(measure, target, radius, c.trials, base.child(1), workers);
    auto ci = wilson_interval(sup.hits, sup.trials);
    double const frac = static_cast<double>(sup.hits) / static_cast<double>(sup.trials);
    s.row("support_hits", c.text("support_target"), num(radius), static_cast<double>(sup.hits));
    s.row("support_fraction", c.text("support_target"), num(radius), frac, ci.lo, ci.hi);
    rec.summary["support_hits"] = static_cast<std::int64_t>(sup.hits);
    rec.summary["support_outside"] = sup.outside_support;
    if (!sup.note.empty())
        rec.notes.push_back(sup.note);

    if (c.flag("moment_checks"))
    {
        auto ex = ensembles::rademacher_moment_exact(4, 2);
        s.row("moment_lhs", "rademacher", "K=4;q=2", ex.lhs);
        s.row("moment_rhs", "rademacher", "K=4;q=2", ex.rhs);
        auto mc = ensembles::moment_inequality_check(ensembles::gaussian_sampler(8), 3,
                                                     static_cast<std::size_t>(c.integer("moment_trials")),
                                                     base.child(2), workers);
        s.mean_row("moment_lhs", "gaussian", "K=8;q=3", mc.lhs, mc.lhs_stderr);
        s.mean_row("moment_rhs", "gaussian", "K=8;q=3", mc.rhs, mc.rhs_stderr);
        s.row("moment_holds", "gaussian", "K=8;q=3", mc.holds ? 1.0 : 0.0);
        s.check(ex.lhs <= ex.rhs, "exact Rademacher moment inequality violated");
    }
}

void run_wave_decay(ExperimentConfig const& c, unsigned workers, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    auto const damping = damping_of(c, 2);
    damping.validate(true);
    auto const hs = c.numbers("hs");
    double const a = c.number("a"), b = c.number("b"), eps = c.number("eps"), alpha = c.number("alpha");
    double T = c.number("T");
    if (T <= 0)
    {
        auto pilot = wave::pilot_decay_time(hs, a, b, damping, 2, eps, c.number("pilot_target"),
                                            static_cast<std::size_t>(c.integer("pilot_trials")), base.child(0),
                                            c.number("frame_dt"), static_cast<int>(c.integer("max_frames")),
                                            workers);
        T = pilot.T;
        s.row("pilot_T", "", "", T);
        rec.summary["pilot_found"] = pilot.found;
        if (!pilot.found)
            rec.notes.push_back("pilot did not reach the target within max_frames; using the last frame");
        auto const frame = static_cast<std::size_t>(
            std::find(pilot.times.begin(), pilot.times.end(), T) - pilot.times.begin());
        for (std::size_t i = 0; i < hs.size(); ++i)
            s.row("pilot_fraction", num(hs[i]), num(T), pilot.fractions[i][frame]);
    }
    auto rows = wave::decay_probability_experiment(hs, a, b, damping, 2, T, eps, c.trials, base.child(1), workers);
    bool all = true;
    for (auto const& r : rows)
    {
        auto const h = num(r.h);
        s.row("decay_fraction", h, num(r.T), r.fraction, r.ci_lo, r.ci_hi);
        s.row("mean_energy", h, num(r.T), r.mean_energy);
        s.row("block_dim", h, std::to_string(r.cutoff), static_cast<double>(r.block_dim));
        all = all && r.ci_lo >= 1.0 - alpha;
    }
    rec.summary["T"] = T;
    rec.summary["all_above_1_minus_alpha"] = all;
}

void run_leakage(ExperimentConfig const& c, unsigned, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    auto const damping = damping_of(c, 2);
    damping.validate(false);
    double const ratio = c.number("ratio"), a = c.number("a"), b = c.number("b"), t = c.number("t");
    auto const hps = c.numbers("h_primes");
    double prev = 0;
    for (std::size_t i = 0; i < hps.size(); ++i)
    {
        FrequencyWindow const source{hps[i], a, b};
        FrequencyWindow const target{hps[i] / ratio, a, b};
        auto r = wave::block_leakage(damping, 2, target, source, t, c.trials, base.child(i));
        auto const h = num(r.h);
        auto const hp = num(r.h_prime);
        s.row("leakage_estimate", h, hp, r.estimate);
        s.row("svd_norm", h, hp, r.svd_norm);
        s.row("source_dim", h, hp, static_cast<double>(r.source_dim));
        s.row("target_dim", h, hp, static_cast<double>(r.target_dim));
        if (i > 0)
            s.row("decrease_factor", h, hp, r.svd_norm > 0 ? prev / r.svd_norm : 0.0);
        prev = r.svd_norm;
        s.check(r.estimate <= r.svd_norm * (1 + 1e-8) + 1e-300, "leakage estimate exceeds the operator norm");
        if (damping.identically_zero())
            s.check(r.estimate == 0.0 && r.svd_norm == 0.0, "free flow leaked between blocks");
    }
}

void run_rate_builder(ExperimentConfig const& c, unsigned workers, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    auto const damping = damping_of(c, 2);
    std::vector<FrequencyWindow> blocks;
    for (double h : c.numbers("hs"))
        blocks.push_back({h, c.number("a"), c.number("b")});
    auto rate = wave::decay_rate_builder(damping, 2, blocks, static_cast<int>(c.integer("J")), c.trials, base,
                                         c.number("frame_dt"), static_cast<int>(c.integer("max_frames")), workers);
    for (std::size_t j = 0; j < rate.T.size(); ++j)
    {
        auto const label = std::to_string(j);
        s.row("T_j", label, "", rate.T[j]);
        s.row("f_value", label, "", rate.values[j]);
        s.row("exceedance", label, num(std::ldexp(1.0, -static_cast<int>(j))), rate.exceedance[j], 0.0,
              rate.wilson_hi[j]);
        if (j > 0)
            s.check(rate.T[j] > rate.T[j - 1], "T_j not strictly increasing");
    }
    rec.summary["complete"] = rate.complete;
    if (!rate.flag.empty())
        rec.notes.push_back(rate.flag);
}

void run_spacetime(ExperimentConfig const& c, unsigned workers, RngStream const& base, ResultRecord& rec)
{
    Sink s{rec};
    int const K = static_cast<int>(c.integer("K"));
    RANDWAVE_REQUIRE(K >= 0, "spacetime-tails: K must be >= 0");
    std::vector<double> alpha;
    for (int k = 0; k <= K; ++k)
        alpha.push_back(std::pow(2.0, -c.number("alpha_decay") * k));
    auto const law = c.text("law") == "dirac" ? ensembles::RadialLaw::dirac(1.0)
                                                : ensembles::RadialLaw::half_gaussian();
    auto measure = ensembles::dyadic_torus_measure(static_cast<int>(c.integer("d")), K, alpha, law, 0.0, field_of(c));
    double const delta = c.number("delta"), p = c.number("p");
    auto rep = wave::spacetime_tail_experiment(measure, delta, p, c.trials, base, workers,
                                               static_cast<std::size_t>(c.integer("thresholds")));
    for (std::size_t i = 0; i < rep.tail.thresholds.size(); ++i)
        s.row("tail_probability", num(rep.tail.thresholds[i]), "", rep.tail.probability[i], rep.tail.ci_lo[i],
              rep.tail.ci_hi[i]);
    s.row("median", "", "", rep.tail.median);
    s.row("mean", "", "", rep.mean);
    s.row("sigma", "", "", rep.sigma);
    s.row("alpha_norm", "", "", rep.alpha_norm);
    s.row("fitted_power", "", std::to_string(rep.fit_points), rep.fitted_power);
    s.row("predicted_power", "", "", rep.predicted_power);
    s.row("T_grid", "", "", rep.grid.T);
    s.row("time_tail_bound", "", "", rep.grid.tail_bound);
    s.row("time_kept_mass", "", "", rep.grid.kept_mass);
    rec.summary["fit_ok"] = rep.fit_ok;
    rec.summary["T_grid"] = rep.grid.T;
    if (p == 2.0)
    {
        s.row("route_gap", std::to_string(rep.route_checks), "", rep.route_gap);
        s.check(rep.route_gap <= 1e-8, "direct and spectral spacetime routes disagree");
        if (delta == 2.0)
        {
            double const w = wave::measure_max_frequency(measure);
            double const exact = pi / 4 + pi / 4 * (1 + 2 * w) * std::exp(-2 * w);
            double const gap = std::abs(wave::spacetime_kernel(rep.grid, delta, w) - exact) / exact;
            s.row("kernel_oracle_gap", num(w), "", gap);
            s.check(gap <= 1e-6, "time kernel misses the closed form");
        }
    }
}

using Runner = std::function<void(ExperimentConfig const&, unsigned, RngStream const&, ResultRecord&)>;
}  // namespace

void run_kind(ExperimentConfig const& config, unsigned workers, ResultRecord& record)
{
    static std::map<std::string, Runner> const table{
        {"tails", run_tails},
        {"medians", run_medians},
        {"defect", run_defect},
        {"sphere-basis", run_sphere_basis},
        {"torus-growth", run_torus_growth},
        {"kakutani", run_kakutani},
        {"wave-decay", run_wave_decay},
        {"leakage", run_leakage},
        {"rate-builder", run_rate_builder},
        {"spacetime-tails", run_spacetime},
    };
    auto it = table.find(config.kind);
    if (it == table.end())
        throw ConfigError("unknown experiment kind '" + config.kind + "'");
    RngStream const base(config.seed, 0);
    it->second(config, workers, base, record);
}

}  // namespace randwave::experiment::detail
