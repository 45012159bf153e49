// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "randwave/common/stats.hpp"
#include "randwave/common/types.hpp"
#include "randwave/ensembles/kakutani.hpp"
#include "randwave/ensembles/moments.hpp"
#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/ensembles/samplers.hpp"
#include "randwave/experiment/config.hpp"
#include "randwave/experiment/runner.hpp"
#include "randwave/geometry/observable.hpp"
#include "randwave/geometry/spectral_block.hpp"
#include "randwave/geometry/weyl.hpp"
#include "randwave/harmonics/sphere_harmonics.hpp"
#include "randwave/normlab/closed_form.hpp"
#include "randwave/normlab/experiments.hpp"
#include "randwave/wave/damped_solver.hpp"
#include "randwave/wave/decay.hpp"

using namespace randwave;
using ensembles::RngStream;
using geometry::FrequencyWindow;
using geometry::ManifoldSpec;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
    std::set<std::string> failed_parts;  //!< sub-criteria that failed, e.g. "11c"

    Outcome() = default;
    Outcome(bool p, std::string d) : pass(p), detail(std::move(d)) {}
};

std::string fmt(char const* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Tolerances.
constexpr double ks_limit = 0.01;
constexpr double machine_tol = 1e-14;
constexpr double l2_tol = 1e-8;
constexpr double n_stderr = 3.0;
constexpr double addition_tol = 1e-8;
constexpr double weyl_tol = 10.0;
constexpr double defect_stderr = 4.0;
constexpr double defect_h_constant = 1.0;
constexpr double band_width = 2.0;
constexpr double oscillator_tol = 1e-6;
constexpr double order_lo = 1.8, order_hi = 2.2;
constexpr double decay_fraction = 0.8;
constexpr double leakage_factor = 4.0;
constexpr double singular_product = 1e-8;

Outcome exact_tail_law()
{
    std::size_t const N = 16, trials = 100000;
    std::vector<double> xs(trials);
    RngStream const base(101, 0);
    for (std::size_t i = 0; i < trials; ++i)
    {
        RngStream rng = base.child(i);
        xs[i] = std::abs(ensembles::sample_sphere_uniform(N, Field::Complex, rng)[0]);
    }
    double const ks = ks_distance(xs, [](double t) { return 1 - std::pow(1 - t * t, 15); });
    return {ks <= ks_limit, fmt("KS = %.4g (limit %g)", ks, ks_limit)};
}

Outcome a2_is_one()
{
    double worst = 0, defect = 0;
    std::vector<geometry::SpectralBlock> blocks;
    for (int k : {5, 10, 20})
        blocks.push_back(geometry::sphere_degree_block(k));
    for (double h : {0.25, 0.125, 0.0625})
        blocks.push_back(geometry::torus_modes_in_window(2, FrequencyWindow{h, 1.0, 2.0}));
    std::uint64_t tag = 0;
    for (auto const& b : blocks)
    {
        for (Field f : {Field::Complex, Field::Real})
            worst = std::max(worst, std::abs(normlab::a_qh_closed_form(2.0, b, f) - 1.0));
        auto rep = normlab::moment_experiment({b, Field::Complex}, 2.0, 200, RngStream(102, tag++), 1);
        defect = std::max(defect, rep.max_l2_defect);
    }
    return {worst <= machine_tol && defect <= l2_tol,
            fmt("max |A_2 - 1| = %.3g, max | ||u||_2 - 1 | = %.3g", worst, defect)};
}

Outcome median_formula()
{
    auto block = geometry::sphere_degree_block(10);
    auto rep = normlab::moment_experiment({block, Field::Complex}, 4.0, 10000, RngStream(103, 0), 1);
    double const target = std::pow(rep.closed_form, 4.0);
    double const z = std::abs(rep.mc_mean_pow - target) / rep.mc_mean_pow_stderr;
    return {z <= n_stderr, fmt("mean ||u||_4^4 = %.6g, A^4 = %.6g, %.2f stderr", rep.mc_mean_pow, target, z)};
}

Outcome addition_theorem()
{
    RngStream rng(104, 0);
    double worst = 0;
    for (int p = 0; p < 1000; ++p)
    {
        double const theta = std::acos(1 - 2 * rng.uniform());
        double const phi = two_pi * rng.uniform();
        for (int k = 0; k <= 50; ++k)
        {
            double sum = 0;
            for (double y : harmonics::eval_basis(k, theta, phi))
                sum += y * y;
            double const expected = (2 * k + 1) / (4 * pi);
            worst = std::max(worst, std::abs(sum - expected) / expected);
        }
    }
    return {worst <= addition_tol, fmt("max rel err %.3g over k <= 50", worst)};
}

Outcome weyl_counts()
{
    double const lambda = 200;
    auto const count = static_cast<double>(geometry::weyl_count(ManifoldSpec::torus(2), lambda));
    double const dev = std::abs(count - pi * lambda * lambda) / lambda;
    int bad = -1;
    for (int K = 0; K <= 100 && bad < 0; ++K)
        if (geometry::weyl_count(ManifoldSpec::sphere(2), K + 0.6) != static_cast<std::uint64_t>((K + 1) * (K + 1)))
            bad = K;
    std::string detail = fmt("T^2 |N - pi l^2|/l = %.3g; S^2 exact for K <= 100", dev);
    if (bad >= 0)
        detail = fmt("T^2 |N - pi l^2|/l = %.3g; S^2 mismatch at K = %d", dev, bad);
    return {dev <= weyl_tol && bad < 0, detail};
}

Outcome defect_identity()
{
    geometry::TrigSeries a;
    a.terms.push_back({{1, 0}, 1.0, 0.0});
    geometry::Observable const cos_obs = geometry::Multiplication{a};
    geometry::Observable const radial = geometry::RadialMultiplier{{0.0, 4.0}, {0.0, 4.0}};
    double const m_a = 14.0 / 9.0;
    bool ok = true;
    std::ostringstream detail;
    std::uint64_t tag = 0;
    for (double h : {1.0 / 16, 1.0 / 32})
    {
        normlab::BlockEnsemble ens{geometry::torus_modes_in_window(2, FrequencyWindow{h, 1.0, 2.0}), Field::Complex};
        auto c = normlab::observable_average_experiment(ens, cos_obs, 2000, RngStream(106, tag++), 1);
        auto r = normlab::observable_average_experiment(ens, radial, 2000, RngStream(106, tag++), 1);
        double const zc = std::abs(c.mc_mean - c.trace_exact) / c.mc_stderr;
        double const zr = std::abs(r.mc_mean - r.trace_exact) / r.mc_stderr;
        double const gap = std::abs(r.mc_mean - m_a);
        ok = ok && zc <= defect_stderr && std::abs(c.trace_exact) <= 1e-12 && zr <= defect_stderr &&
             gap <= defect_h_constant * h + defect_stderr * r.mc_stderr;
        detail << fmt("h=1/%g: cos %.2f se, radial %.2f se, |mean - 14/9| = %.3g; ", 1 / h, zc, zr, gap);
    }
    return {ok, detail.str()};
}

Outcome median_scaling()
{
    std::vector<geometry::SpectralBlock> blocks;
    for (int k : {8, 16, 32, 64})
        blocks.push_back(geometry::sphere_degree_block(k));
    auto rep = normlab::linf_median_scaling(blocks, Field::Complex, 2000, RngStream(107, 0), 1);
    double const width = rep.band_hi / rep.band_lo;
    return {width <= band_width && rep.monotone,
            fmt("band [%.4g, %.4g] width x%.3f, medians %s", rep.band_lo, rep.band_hi, width,
                rep.monotone ? "increasing" : "not increasing")};
}

double oscillator_energy(double a, double w, double t)
{
    double const nu = std::sqrt(w * w - a * a);
    double const u = std::exp(-a * t) * (std::cos(nu * t) + a / nu * std::sin(nu * t));
    double const v = -std::exp(-a * t) * w * w / nu * std::sin(nu * t);
    return 0.5 * (w * w * u * u + v * v);
}

Outcome damped_oracle()
{
    double const a0 = 0.1, w = 5.0;
    auto s = wave::WaveState::zeros(2, 5);
    s.u0[s.index({3, 4})] = 1.0;
    auto const damping = wave::DampingProfile::constant(2, a0);
    double const dt = 0.01;
    auto coarse = wave::damped_evolve(s, damping, 10.0, dt, 10);
    auto fine = wave::damped_evolve(s, damping, 10.0, dt / 2, 20);
    double worst = 0;
    for (std::size_t i = 0; i < coarse.times.size(); ++i)
    {
        double const rich = (4 * fine.energies[i] - coarse.energies[i]) / 3;
        double const exact = oscillator_energy(a0, w, coarse.times[i]);
        worst = std::max(worst, std::abs(rich - exact) / exact);
    }
    std::vector<double> res;
    for (double step : {0.02, 0.01, 0.005})
        res.push_back(wave::dissipation_residual(wave::damped_evolve(s, damping, 10.0, step)));
    double const o1 = std::log2(res[0] / res[1]), o2 = std::log2(res[1] / res[2]);
    bool const ok = worst <= oscillator_tol && o1 >= order_lo && o1 <= order_hi && o2 >= order_lo && o2 <= order_hi;
    return {ok, fmt("max rel energy err %.3g; residual orders %.3f, %.3f", worst, o1, o2)};
}

experiment::ResultRecord run_kind(std::string const& text)
{
    auto rec = experiment::run_experiment(experiment::parse_config(text));
    return rec;
}

Outcome decay_experiment()
{
    auto rec = run_kind(
        "[run]\nseed = 109\ntrials = 500\nworkers = 1\n"
        "[wave-decay]\nhs = 0.125, 0.0625, 0.03125\neps = 0.3\nalpha = 0.2\nT = 0\n"
        "damping = strip\na0 = 1\npower = 1\n");
    double T = 0;
    std::ostringstream detail;
    bool ok = rec.failures.empty();
    int seen = 0;
    for (auto const& r : rec.rows)
    {
        if (r.metric == "pilot_T")
            T = r.value;
        if (r.metric == "decay_fraction")
        {
            ++seen;
            ok = ok && r.ci_lo >= decay_fraction;
            detail << fmt("h=%s: %.3f (CI lo %.3f); ", r.param1.c_str(), r.value, r.ci_lo);
        }
    }
    ok = ok && seen == 3 && T > 0;
    return {ok, fmt("pilot T = %g; ", T) + detail.str()};
}

Outcome leakage()
{
    auto const strip = wave::DampingProfile::strip(2, 1.0, 1);
    auto zero = wave::block_leakage(wave::DampingProfile::zero(2), 2, {0.125, 1.0, 2.0}, {0.5, 1.0, 2.0}, 2.0, 16,
                                    RngStream(110, 0));
    bool ok = zero.estimate == 0.0;
    std::vector<double> est;
    std::uint64_t tag = 1;
    for (double hp : {0.5, 0.25, 0.125})
    {
        auto r = wave::block_leakage(strip, 2, {hp / 4, 1.0, 2.0}, {hp, 1.0, 2.0}, 2.0, 16, RngStream(110, tag++));
        est.push_back(r.estimate);
    }
    std::ostringstream detail;
    detail << fmt("a=0 gives %g; estimates %.3g, %.3g, %.3g; factors", zero.estimate, est[0], est[1], est[2]);
    for (std::size_t i = 1; i < est.size(); ++i)
    {
        double const factor = est[i - 1] / est[i];
        ok = ok && factor >= leakage_factor;
        detail << fmt(" x%.3g", factor);
    }
    return {ok, detail.str()};
}

ensembles::KakutaniResult kakutani(int K, std::function<double(int)> const& ratio)
{
    std::vector<ensembles::ScaledLaw> s1, s2;
    for (int k = 1; k <= K; ++k)
    {
        s1.push_back({ensembles::RadialLaw::half_gaussian(), 1.0 / k});
        s2.push_back({ensembles::RadialLaw::half_gaussian(), ratio(k) / k});
    }
    return ensembles::kakutani_product(s1, s2);
}

Outcome kakutani_criterion()
{
    using ensembles::KakutaniVerdict;
    auto same = kakutani(100, [](int) { return 1.0; });
    auto ratio = kakutani(100, [](int k) { return 1.0 + 1.0 / k; });
    auto doubled = kakutani(100, [](int) { return 2.0; });
    Outcome out;
    if (!(same.verdict == KakutaniVerdict::Equivalent && same.partial_product == 1.0))
        out.failed_parts.insert("11a");
    if (ratio.verdict != KakutaniVerdict::Equivalent)
        out.failed_parts.insert("11b");
    if (!(doubled.partial_product < singular_product && doubled.verdict == KakutaniVerdict::Singular))
        out.failed_parts.insert("11c");
    out.pass = out.failed_parts.empty();
    out.detail = fmt("11a %s product %.17g; 11b %s product %.4g; 11c %s product %.4g at K=100 (needs < %g)",
                     ensembles::to_string(same.verdict).c_str(), same.partial_product,
                     ensembles::to_string(ratio.verdict).c_str(), ratio.partial_product,
                     ensembles::to_string(doubled.verdict).c_str(), doubled.partial_product, singular_product);
    return out;
}

Outcome moment_inequality()
{
    auto exact = ensembles::rademacher_moment_exact(4, 2);
    auto mc = ensembles::moment_inequality_check(ensembles::gaussian_sampler(8), 3, 1000000, RngStream(112, 0), 1);
    double const margin = n_stderr * std::hypot(mc.lhs_stderr, mc.rhs_stderr);
    bool const ok = exact.lhs == 40.0 && exact.rhs == 64.0 && mc.lhs <= mc.rhs + margin;
    return {ok, fmt("Rademacher K=4 q=2: %g <= %g; Gaussian K=8 q=3: %.6g <= %.6g (+%.3g)", exact.lhs, exact.rhs,
                    mc.lhs, mc.rhs, margin)};
}

Outcome reproducibility()
{
    std::vector<std::string> const configs{
        "[tails]\nstatistic = norm\nq = 4\nmode = median\n[run]\ntrials = 200\n",
        "[tails]\nstatistic = point\n[run]\ntrials = 500\n",
        "[medians]\ndegrees = 10\nq = 4\n[run]\ntrials = 300\n",
        "[medians]\ndegrees = 4, 8\nq = inf\n[run]\ntrials = 100\n",
        "[defect]\nobservable = radial\nhs = 0.125, 0.0625\n[run]\ntrials = 100\n",
        "[sphere-basis]\ndegrees = 5, 10\npoints = 50\n[run]\ntrials = 2\n",
        "[torus-growth]\nks = 5, 25\n",
        "[kakutani]\nscenario = ratio\n[run]\ntrials = 300\n",
        "[wave-decay]\nhs = 0.25, 0.125\nT = 0\nmax_frames = 20\npilot_trials = 20\n[run]\ntrials = 40\n",
        "[leakage]\nh_primes = 0.5, 0.25\n[run]\ntrials = 4\n",
        "[rate-builder]\nhs = 0.25\nJ = 3\n[run]\ntrials = 40\n",
        "[spacetime-tails]\nK = 4\n[run]\ntrials = 200\n",
    };
    std::vector<std::string> differing;
    for (auto const& text : configs)
    {
        auto config = experiment::parse_config(text);
        config.seed = 113;
        std::string reference;
        for (unsigned workers : {1u, 4u, 8u})
        {
            config.workers = workers;
            auto csv = experiment::format_csv(experiment::run_experiment(config));
            if (reference.empty())
                reference = csv;
            else if (csv != reference)
            {
                differing.push_back(config.kind);
                break;
            }
        }
    }
    std::string detail = fmt("%zu configs over all kinds, workers 1/4/8", configs.size());
    for (auto const& k : differing)
        detail += "; differs: " + k;
    return {differing.empty(), detail};
}

struct Criterion
{
    std::string id;
    std::string name;
    std::function<Outcome()> check;
    double max_seconds = 0;  //!< 0: no runtime bound
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<std::string> allow_fail;
    std::vector<std::string> only;
    app.add_option("--allow-fail", allow_fail, "sub-criteria whose failure does not change the exit code");
    app.add_option("--only", only, "run only these criterion ids");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> const criteria{
        {"1", "exact tail law, complex N=16", exact_tail_law, 10},
        {"2", "A_2 = 1 and L2 quadrature", a2_is_one},
        {"3", "median formula, S^2 k=10 q=4", median_formula, 60},
        {"4", "addition theorem", addition_theorem},
        {"5", "Weyl counts", weyl_counts},
        {"6", "defect-measure identity", defect_identity},
        {"7", "L-infinity median scaling", median_scaling},
        {"8", "damped-wave oracle", damped_oracle},
        {"9", "decay probability with pilot T", decay_experiment, 600},
        {"10", "block leakage", leakage},
        {"11", "Kakutani dichotomy", kakutani_criterion},
        {"12", "moment inequality", moment_inequality},
        {"13", "reproducibility across workers", reproducibility},
    };

    std::set<std::string> const allowed(allow_fail.begin(), allow_fail.end());
    std::set<std::string> const selected(only.begin(), only.end());
    int gating_failures = 0;
    for (auto const& c : criteria)
    {
        if (!selected.empty() && !selected.count(c.id))
            continue;
        auto const start = std::chrono::steady_clock::now();
        Outcome out;
        try
        {
            out = c.check();
        }
        catch (std::exception const& e)
        {
            out = {false, std::string("exception: ") + e.what()};
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.max_seconds > 0 && secs > c.max_seconds)
        {
            out.pass = false;
            out.detail += fmt("; runtime %.1f s over %g s", secs, c.max_seconds);
        }
        std::printf("%s %s: %s | %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(),
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.pass)
        {
            bool excused = !out.failed_parts.empty();
            for (auto const& part : out.failed_parts)
                excused = excused && allowed.count(part);
            if (!excused)
                ++gating_failures;
        }
        if (c.id == "11")
        {
            auto longer = kakutani(200, [](int) { return 2.0; });
            std::printf("INFO 11c at K=200 (not gating): product %.4g, verdict %s\n", longer.partial_product,
                        ensembles::to_string(longer.verdict).c_str());
        }
    }
    return gating_failures == 0 ? 0 : 1;
}
