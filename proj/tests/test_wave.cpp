#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "randwave/common/types.hpp"
#include "randwave/ensembles/measure.hpp"
#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/wave/birkhoff.hpp"
#include "randwave/wave/damped_solver.hpp"
#include "randwave/wave/damping.hpp"
#include "randwave/wave/decay.hpp"
#include "randwave/wave/line_propagator.hpp"
#include "randwave/wave/spacetime.hpp"
#include "randwave/wave/wave_state.hpp"

using namespace randwave;
using namespace randwave::wave;
using ensembles::RngStream;

namespace
{
// Real random state: coefficients paired as c_{-n} = conj(c_n).
WaveState random_real_state(int d, int cutoff, RngStream rng, int band = -1)
{
    auto s = WaveState::zeros(d, cutoff);
    if (band < 0)
        band = cutoff;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        auto n = s.lattice(i);
        if (!s.in_disk(i) || s.omega(i) > band)
            continue;
        std::vector<int> m(n.size());
        for (std::size_t k = 0; k < n.size(); ++k)
            m[k] = -n[k];
        std::size_t const j = s.index(m);
        if (j < i)
            continue;
        cplx a{rng.normal(), rng.normal()}, b{rng.normal(), rng.normal()};
        if (j == i)
            a = a.real(), b = b.real();
        s.u0[i] = a / (1.0 + s.omega(i));
        s.u1[i] = b / (1.0 + s.omega(i));
        s.u0[j] = std::conj(s.u0[i]);
        s.u1[j] = std::conj(s.u1[i]);
    }
    return s;
}

double max_diff(WaveState const& a, WaveState const& b)
{
    double e = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        e = std::max({e, std::abs(a.u0[i] - b.u0[i]), std::abs(a.u1[i] - b.u1[i])});
    return e;
}

// u'' + 2 a u' + w^2 u = 0, u(0) = 1, u'(0) = 0
double oscillator_energy(double a, double w, double t)
{
    double const nu = std::sqrt(w * w - a * a);
    double const u = std::exp(-a * t) * (std::cos(nu * t) + a / nu * std::sin(nu * t));
    double const v = -std::exp(-a * t) * w * w / nu * std::sin(nu * t);
    return 0.5 * (w * w * u * u + v * v);
}
}  // namespace

TEST_CASE("energy examples")
{
    auto s = WaveState::zeros(2, 4);
    CHECK(energy(s) == 0.0);
    s.u0[s.index({3, 1})] = 1.0;
    CHECK(energy(s) == doctest::Approx(5.0));
    auto z = WaveState::zeros(2, 4);
    z.u1[z.index({0, 0})] = 1.0;
    CHECK(energy(z) == doctest::Approx(0.5));
    z.u0[z.index({0, 0})] = 7.0;
    CHECK(energy(z) == doctest::Approx(0.5));
}

TEST_CASE("free propagator")
{
    auto s = random_real_state(2, 8, RngStream(1, 0));
    CHECK(max_diff(free_propagator(s, 0.0), s) == 0.0);
    auto later = free_propagator(s, 10.0);
    CHECK(std::abs(energy(later) - energy(s)) <= 1e-12);
    CHECK(max_diff(free_propagator(later, -10.0), s) <= 1e-12);

    auto m = WaveState::zeros(2, 5);
    auto const i = m.index({3, 4});
    m.u0[i] = 1.0;
    auto half = free_propagator(m, pi / 5.0);
    CHECK(std::abs(half.u0[i] - cplx{-1.0, 0.0}) <= 1e-14);
    CHECK(std::abs(half.u1[i]) <= 1e-13);

    auto zero = WaveState::zeros(1, 2);
    zero.u0[zero.index({0})] = 2.0;
    zero.u1[zero.index({0})] = 3.0;
    CHECK(std::abs(free_propagator(zero, 1.5).u0[zero.index({0})] - cplx{6.5, 0}) <= 1e-14);
}

TEST_CASE("undamped evolution equals the free flow")
{
    auto s = random_real_state(2, 10, RngStream(2, 0));
    auto tr = damped_evolve(s, DampingProfile::zero(2), 3.0, 0.01, 1000);
    CHECK(max_diff(tr.states.back(), free_propagator(s, 3.0)) <= 1e-10);
    CHECK_THROWS_AS(damped_evolve(s, DampingProfile::zero(2), 1.0, 0.06), InvalidArgument);
}

TEST_CASE("constant damping against the oscillator")
{
    double const a0 = 0.1, w = 5.0;
    auto s = WaveState::zeros(2, 5);
    s.u0[s.index({3, 4})] = 1.0;
    auto damping = DampingProfile::constant(2, a0);
    double const dt = 0.01;
    auto coarse = damped_evolve(s, damping, 10.0, dt, 10);
    auto fine = damped_evolve(s, damping, 10.0, dt / 2, 20);
    REQUIRE(coarse.times.size() == fine.times.size());
    double worst = 0;
    for (std::size_t i = 0; i < coarse.times.size(); ++i)
    {
        double const rich = (4 * fine.energies[i] - coarse.energies[i]) / 3;
        double const exact = oscillator_energy(a0, w, coarse.times[i]);
        worst = std::max(worst, std::abs(rich - exact) / exact);
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("energy never increases and the dissipation identity converges")
{
    auto s = WaveState::zeros(2, 5);
    s.u0[s.index({3, 4})] = 1.0;
    auto damping = DampingProfile::constant(2, 0.1);
    std::vector<double> res;
    for (double dt : {0.02, 0.01, 0.005})
    {
        auto tr = damped_evolve(s, damping, 5.0, dt);
        for (std::size_t i = 1; i < tr.energies.size(); ++i)
            REQUIRE(tr.energies[i] <= tr.energies[i - 1] + 1e-9);
        res.push_back(dissipation_residual(tr));
    }
    for (std::size_t i = 1; i < res.size(); ++i)
    {
        double const order = std::log2(res[i - 1] / res[i]);
        CHECK(order >= 1.8);
        CHECK(order <= 2.2);
    }

    auto free_tr = damped_evolve(random_real_state(2, 6, RngStream(3, 0)), DampingProfile::zero(2), 2.0, 0.01);
    CHECK(dissipation_residual(free_tr) <= 1e-10);
}

TEST_CASE("strip damping dissipation residual")
{
    auto s = random_real_state(2, 16, RngStream(4, 0));
    double const scale = 1 / std::sqrt(energy(s));
    for (std::size_t i = 0; i < s.size(); ++i)
        s.u0[i] *= scale, s.u1[i] *= scale;
    auto tr = damped_evolve(s, DampingProfile::strip(2, 1.0, 2), 1.0, 1e-3);
    for (std::size_t i = 1; i < tr.energies.size(); ++i)
        REQUIRE(tr.energies[i] <= tr.energies[i - 1] + 1e-9);
    CHECK(dissipation_residual(tr) <= 1e-4);
}

TEST_CASE("constants in u0 do not change the energy history")
{
    auto s = random_real_state(2, 8, RngStream(5, 0));
    auto shifted = s;
    shifted.u0[s.index({0, 0})] += 3.0;
    auto damping = DampingProfile::strip(2, 1.0, 1);
    auto a = damped_evolve(s, damping, 1.0, 0.02);
    auto b = damped_evolve(shifted, damping, 1.0, 0.02);
    for (std::size_t i = 0; i < a.energies.size(); ++i)
        REQUIRE(std::abs(a.energies[i] - b.energies[i]) <= 1e-12);
}

TEST_CASE("line propagator matches the grid solver")
{
    for (int d : {1, 2})
        for (auto const& damping : {DampingProfile::strip(d, 1.0, 1), DampingProfile::strip(d, 0.7, 3)})
        {
            int const cutoff = 9;
            double const dt = 0.04;
            auto s = random_real_state(d, cutoff, RngStream(6, static_cast<std::uint64_t>(d)));
            DampedWaveSolver solver(damping, d, cutoff, dt);
            auto grid_state = s;
            for (int k = 0; k < 7; ++k)
                solver.step(grid_state);

            LinePropagator line(damping, d, cutoff, dt);
            auto out = WaveState::zeros(d, cutoff);
            for (auto const& g : line.groups())
            {
                Eigen::VectorXd x = group_from_state(d, g, s);
                add_group_to_state(d, g, line.power(g, 7) * x, out);
            }
            CHECK(max_diff(out, grid_state) <= 1e-10);
        }
}

TEST_CASE("birkhoff averages")
{
    auto c = DampingProfile::constant(2, 0.4);
    CHECK(birkhoff_average(c, {0.3, 1.0}, {0.6, 0.8}, 7.0) == doctest::Approx(0.4));

    DampingProfile a;
    a.a.d = 2;
    a.a.terms.push_back({{0, 0}, 1.0, 0.0});
    a.a.terms.push_back({{1, 0}, 1.0, 0.0});
    for (double t : {1.0, 10.0, 100.0})
    {
        double const x1 = 0.7;
        double const exact = 1 + (std::sin(x1 + t) - std::sin(x1)) / t;
        CHECK(birkhoff_average(a, {x1, 0.2}, {1.0, 0.0}, t) == doctest::Approx(exact).epsilon(1e-13));
    }
    CHECK(birkhoff_limit_estimate(a, {0.7, 0.2}, {1.0, 0.0}) == doctest::Approx(1.0));

    auto strip = DampingProfile::strip(2, 1.0, 2);
    for (double t : {1.0, 50.0})
        CHECK(std::abs(birkhoff_average(strip, {pi, 0.3}, {0.0, 1.0}, t)) <= 1e-15);
    CHECK(std::abs(birkhoff_limit_estimate(strip, {pi, 0.3}, {0.0, 1.0})) <= 1e-15);

    double const phi = (1 + std::sqrt(5.0)) / 2;
    double const n = std::sqrt(1 + phi * phi);
    std::vector<double> dir{1 / n, phi / n};
    double const mean = strip.a.mean();
    CHECK(birkhoff_limit_estimate(strip, {0.1, 0.2}, dir) == doctest::Approx(mean));
    double prev = INFINITY;
    for (double t : {1e2, 1e3, 1e4})
    {
        double const err = std::abs(birkhoff_average(strip, {0.1, 0.2}, dir, t) - mean);
        CHECK(err < prev);
        CHECK(err * t <= 10.0);
        prev = err;
    }
}

TEST_CASE("decay experiment limits")
{
    auto strip = DampingProfile::strip(2, 1.0, 1);
    auto rows = decay_probability_experiment({0.25}, 1.0, 2.0, strip, 2, 0.0, 1.5, 50, RngStream(1, 0), 1);
    CHECK(rows[0].fraction == 1.0);

    double const a0 = 1.0, T = 4.0;
    auto c = DampingProfile::constant(2, a0);
    auto decayed = decay_probability_experiment({0.25, 0.125}, 1.0, 2.0, c, 2, T, 3 * std::exp(-2 * a0 * T), 50,
                                                RngStream(2, 0), 1);
    for (auto const& r : decayed)
        CHECK(r.fraction == 1.0);
}

TEST_CASE("block leakage")
{
    geometry::FrequencyWindow const target{0.125, 1.0, 2.0}, source{0.5, 1.0, 2.0};
    auto none = block_leakage(DampingProfile::zero(2), 2, target, source, 2.0, 8, RngStream(1, 0));
    CHECK(none.estimate == 0.0);
    CHECK(none.svd_norm == 0.0);
    auto strip = DampingProfile::strip(2, 1.0, 1);
    auto at_zero = block_leakage(strip, 2, target, source, 0.0, 8, RngStream(1, 0));
    CHECK(at_zero.estimate == 0.0);
    CHECK_THROWS_AS(block_leakage(strip, 2, {0.25, 1.0, 2.0}, {0.25, 1.5, 3.0}, 1.0, 4, RngStream(1, 0)),
                    InvalidArgument);

    auto big = block_leakage(strip, 2, {0.125, 1.0, 2.0}, {0.5, 1.0, 2.0}, 2.0, 8, RngStream(2, 0));
    auto small = block_leakage(strip, 2, {0.0625, 1.0, 2.0}, {0.25, 1.0, 2.0}, 2.0, 8, RngStream(2, 0));
    CHECK(big.estimate <= big.svd_norm * (1 + 1e-8));
    CHECK(big.estimate >= 0.5 * big.svd_norm);
    CHECK(small.svd_norm * 4 <= big.svd_norm);
}

TEST_CASE("decay rate builder")
{
    double const a0 = 1.0;
    auto c = DampingProfile::constant(2, a0);
    std::vector<geometry::FrequencyWindow> blocks{{0.25, 1.0, 2.0}};
    auto rate = decay_rate_builder(c, 2, blocks, 5, 100, RngStream(3, 0), 0.05, 200, 1);
    REQUIRE(rate.complete);
    REQUIRE(rate.T.size() == 6);
    for (std::size_t j = 0; j < rate.T.size(); ++j)
    {
        CHECK(std::abs(rate.T[j] - j * std::log(2.0) / (2 * a0)) <= 1.0);
        if (j > 0)
            CHECK(rate.T[j] > rate.T[j - 1]);
        CHECK(rate.values[j] == doctest::Approx(std::pow(2.0, -0.5 * j)));
    }
    CHECK(rate(rate.T[0] - 1.0) == 1.0);
    CHECK(rate(rate.T[2] + 1e-9) == rate.values[2]);

    auto capped = decay_rate_builder(DampingProfile::strip(2, 1.0, 1), 2, blocks, 30, 50, RngStream(3, 0), 0.1, 5, 1);
    CHECK_FALSE(capped.complete);
    CHECK_FALSE(capped.flag.empty());
}

TEST_CASE("spacetime norms")
{
    auto measure = ensembles::dyadic_torus_measure(1, 3, {1.0, 0.5, 0.25, 0.125}, ensembles::RadialLaw::half_gaussian());
    auto grid = spacetime_time_grid(2.0, 2.0, measure_max_frequency(measure));
    CHECK(grid.tail_bound <= 1e-6 * grid.kept_mass);

    ensembles::RandomFieldCoeffs zero;
    for (auto const& b : measure.blocks)
        zero.blocks.emplace_back(b.dim(), cplx{});
    CHECK(weighted_spacetime_norm(measure, zero, 2.0, 2.0, grid) == 0.0);

    // single mode n = 3 in block 2 (|n| in (2, 4])
    auto one = zero;
    for (std::size_t j = 0; j < measure.blocks[2].dim(); ++j)
        if (measure.blocks[2].modes[j].lattice[0] == 3)
        {
            one.blocks[2][j] = 0.8;
            break;
        }
    double const w = 3.0;
    double const exact = pi / 4 + pi / 4 * (1 + 2 * w) * std::exp(-2 * w);
    double const direct = weighted_spacetime_norm(measure, one, 2.0, 2.0, grid);
    CHECK(std::abs(direct * direct - 0.64 * exact) <= 1e-6 * 0.64 * exact);

    RngStream rng(4, 0);
    for (int i = 0; i < 3; ++i)
    {
        auto u = ensembles::sample_full_field(measure, rng);
        double const a = weighted_spacetime_norm(measure, u, 2.0, 2.0, grid);
        double const b = spectral_spacetime_norm_p2(measure, u, 2.0, grid);
        CHECK(std::abs(a - b) <= 1e-10 * b);
    }
    CHECK_THROWS_AS(spacetime_time_grid(0.5, 2.0, 8.0), InvalidArgument);
    CHECK_THROWS_AS(weighted_spacetime_norm(measure, zero, 0.4, 2.0, grid), InvalidArgument);
}

TEST_CASE("spacetime tails of a gaussian measure")
{
    std::vector<double> alpha;
    for (int k = 0; k <= 5; ++k)
        alpha.push_back(std::pow(2.0, -k));
    auto measure = ensembles::dyadic_torus_measure(1, 5, alpha, ensembles::RadialLaw::half_gaussian());
    auto rep = spacetime_tail_experiment(measure, 2.0, 2.0, 3000, RngStream(8, 0), 1);
    CHECK(rep.predicted_power == doctest::Approx(2.0 / 3.0));
    CHECK(rep.route_gap <= 1e-10);
    REQUIRE(rep.fit_ok);
    CHECK(rep.fitted_power >= 2.0 / 3.0);
    for (std::size_t i = 1; i < rep.tail.probability.size(); ++i)
        CHECK(rep.tail.probability[i] <= rep.tail.probability[i - 1]);
}
