#include "randwave/wave/spacetime.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "common/fft.hpp"
#include "randwave/common/parallel.hpp"
#include "randwave/common/stats.hpp"
#include "randwave/harmonics/sphere_harmonics.hpp"
#include "randwave/harmonics/synthesis.hpp"

namespace randwave::wave
{
using ensembles::MeasureSpec;
using ensembles::RandomFieldCoeffs;

namespace
{
double japanese(double t)
{
    return std::sqrt(1.0 + t * t);
}

double kept_mass(double e, double T)
{
    auto f = [e](double t) { return std::pow(1.0 + t * t, -0.5 * e); };
    double mass = 0;
    for (double lo = 0; lo < T; lo += 1.0)
        mass += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, std::min(T, lo + 1.0));
    return mass;
}

void check_exponents(double delta, double p)
{
    RANDWAVE_REQUIRE(p >= 1, "spacetime norm: p must be >= 1");
    RANDWAVE_REQUIRE(delta * p > 1, "spacetime norm: need delta > 1/p");
}

std::vector<cplx> complex_coeffs(MeasureSpec const& m, RandomFieldCoeffs const& u, std::size_t k)
{
    auto const& c = u.blocks[k];
    if (m.field == Field::Real)
        return harmonics::torus_real_to_complex(m.blocks[k], c);
    return {c.begin(), c.end()};
}
}  // namespace

TimeGrid spacetime_time_grid(double delta,
                             double p,
                             double omega_max,
                             int nodes_per_panel,
                             double rel_tail)
{
    check_exponents(delta, p);
    RANDWAVE_REQUIRE(omega_max >= 0, "time grid: omega_max must be >= 0");
    RANDWAVE_REQUIRE(nodes_per_panel >= 2 && rel_tail > 0, "time grid: bad resolution");
    double const e = delta * p;
    // int_T^inf <t>^{-e} <= T^{1-e}/(e-1)
    auto bound = [e](double T) { return std::pow(T, 1.0 - e) / (e - 1.0); };
    auto ok = [&](double T) { return bound(T) <= rel_tail * kept_mass(e, T); };
    double hi = 1.0;
    while (!ok(hi))
        hi *= 2.0;
    double lo = hi / 2.0;
    for (int it = 0; it < 60 && hi - lo > 1e-3; ++it)
    {
        double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
    }

    TimeGrid g;
    double const width = std::min(0.5, two_pi / (p * omega_max + 1.0));
    auto const panels = static_cast<std::size_t>(std::ceil(hi / width));
    g.panel_width = width;
    g.T = static_cast<double>(panels) * width;
    g.kept_mass = kept_mass(e, g.T);
    g.tail_bound = bound(g.T);

    std::vector<double> x, w;
    harmonics::gauss_legendre(nodes_per_panel, x, w);
    g.nodes.reserve(panels * x.size());
    g.weights.reserve(panels * x.size());
    for (std::size_t k = 0; k < panels; ++k)
    {
        double const mid = (static_cast<double>(k) + 0.5) * width;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            g.nodes.push_back(mid + 0.5 * width * x[i]);
            g.weights.push_back(width * w[i]);  // 2 * (width/2): both half-lines
        }
    }
    return g;
}

double measure_max_frequency(MeasureSpec const& measure)
{
    double w = 0;
    for (auto const& b : measure.blocks)
        w = std::max(w, b.max_frequency());
    return w;
}

double weighted_spacetime_norm(MeasureSpec const& measure,
                               RandomFieldCoeffs const& u,
                               double delta,
                               double p,
                               TimeGrid const& grid)
{
    check_exponents(delta, p);
    RANDWAVE_REQUIRE(u.blocks.size() == measure.num_blocks(), "spacetime norm: block count mismatch");
    RANDWAVE_REQUIRE(!measure.blocks.empty(), "spacetime norm: empty measure");
    int const d = measure.blocks.front().manifold.d;
    for (auto const& b : measure.blocks)
        RANDWAVE_REQUIRE(b.manifold.kind == geometry::ManifoldKind::Torus,
                         "spacetime norm: torus blocks only");

    std::vector<std::vector<int>> lattice;
    std::vector<cplx> coeff;
    std::vector<double> omega;
    int L = 0;
    for (std::size_t k = 0; k < measure.num_blocks(); ++k)
    {
        auto c = complex_coeffs(measure, u, k);
        for (std::size_t j = 0; j < c.size(); ++j)
        {
            if (c[j] == cplx{})
                continue;
            auto const& mode = measure.blocks[k].modes[j];
            for (int v : mode.lattice)
                L = std::max(L, std::abs(v));
            lattice.push_back(mode.lattice);
            coeff.push_back(c[j]);
            omega.push_back(mode.omega);
        }
    }
    if (coeff.empty())
        return 0.0;

    int const M = detail::fast_fft_size(std::max(2 * L + 1, static_cast<int>(std::ceil(p * L)) + 1));
    std::size_t size = 1;
    for (int i = 0; i < d; ++i)
        size *= static_cast<std::size_t>(M);
    std::vector<std::size_t> slot;
    for (auto const& n : lattice)
    {
        std::size_t s = 0;
        for (int v : n)
            s = s * static_cast<std::size_t>(M) + static_cast<std::size_t>((v % M + M) % M);
        slot.push_back(s);
    }
    double const basis_norm = std::pow(two_pi, -0.5 * d);
    double const cell = std::pow(two_pi / M, d);
    std::vector<int> dims(static_cast<std::size_t>(d), M);
    std::vector<cplx> buf(size);

    double total = 0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    {
        double const t = grid.nodes[i];
        std::fill(buf.begin(), buf.end(), cplx{});
        for (std::size_t j = 0; j < coeff.size(); ++j)
            buf[slot[j]] += basis_norm * std::cos(omega[j] * t) * coeff[j];
        detail::fft_inplace(buf, dims, detail::FftDirection::Backward);
        double s = 0;
        for (auto const& v : buf)
            s += std::pow(std::abs(v), p);
        total += grid.weights[i] * std::pow(japanese(t), -delta * p) * cell * s;
    }
    return std::pow(total, 1.0 / p);
}

double spacetime_kernel(TimeGrid const& grid, double delta, double omega)
{
    double k = 0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    {
        double const t = grid.nodes[i];
        double const c = std::cos(omega * t);
        k += grid.weights[i] * std::pow(japanese(t), -2.0 * delta) * c * c;
    }
    return k;
}

double spectral_spacetime_norm_p2(MeasureSpec const& measure,
                                  RandomFieldCoeffs const& u,
                                  double delta,
                                  TimeGrid const& grid)
{
    check_exponents(delta, 2.0);
    RANDWAVE_REQUIRE(u.blocks.size() == measure.num_blocks(), "spacetime norm: block count mismatch");
    double total = 0;
    for (std::size_t k = 0; k < measure.num_blocks(); ++k)
    {
        // cos(|n| t) is shared by +-n, so the real basis needs no conversion
        auto const& block = measure.blocks[k];
        for (std::size_t j = 0; j < block.dim(); ++j)
        {
            double const a = std::norm(u.blocks[k][j]);
            if (a > 0)
                total += a * spacetime_kernel(grid, delta, block.modes[j].omega);
        }
    }
    return std::sqrt(total);
}

SpacetimeTailReport spacetime_tail_experiment(MeasureSpec const& measure,
                                              double delta,
                                              double p,
                                              std::size_t trials,
                                              ensembles::RngStream const& base,
                                              unsigned workers,
                                              std::size_t n_thresholds,
                                              std::size_t route_checks)
{
    check_exponents(delta, p);
    measure.validate();
    RANDWAVE_REQUIRE(trials >= 100, "spacetime tails: trials must be >= 100");
    RANDWAVE_REQUIRE(n_thresholds >= 2, "spacetime tails: need at least two thresholds");

    SpacetimeTailReport rep;
    rep.delta = delta;
    rep.p = p;
    rep.grid = spacetime_time_grid(delta, p, measure_max_frequency(measure));
    rep.alpha_norm = std::sqrt(measure.alpha_norm_sq());
    double gamma = 0;
    for (auto const& law : measure.laws)
        gamma = std::max(gamma, law.tail_gamma());
    rep.predicted_power = std::isinf(gamma) ? 1.0 : gamma / (gamma + 1.0);

    bool const spectral = p == 2.0;
    // per-mode kernel cache for the spectral route
    std::vector<std::vector<double>> kern(measure.num_blocks());
    if (spectral)
        for (std::size_t k = 0; k < measure.num_blocks(); ++k)
            for (auto const& mode : measure.blocks[k].modes)
                kern[k].push_back(spacetime_kernel(rep.grid, delta, mode.omega));

    std::vector<double> values(trials);
    std::vector<double> gaps(trials, 0.0);
    rep.route_checks = spectral ? std::min(route_checks, trials) : 0;
    parallel_for(trials, workers, [&](std::size_t i) {
        ensembles::RngStream rng = base.child(i);
        auto u = ensembles::sample_full_field(measure, rng);
        if (!spectral)
        {
            values[i] = weighted_spacetime_norm(measure, u, delta, p, rep.grid);
            return;
        }
        double total = 0;
        for (std::size_t k = 0; k < u.blocks.size(); ++k)
            for (std::size_t j = 0; j < u.blocks[k].size(); ++j)
                total += std::norm(u.blocks[k][j]) * kern[k][j];
        values[i] = std::sqrt(total);
        if (i < rep.route_checks)
        {
            double direct = weighted_spacetime_norm(measure, u, delta, p, rep.grid);
            gaps[i] = values[i] > 0 ? std::abs(direct - values[i]) / values[i] : std::abs(direct);
        }
    });
    rep.route_gap = *std::max_element(gaps.begin(), gaps.end());

    auto ms = mean_stderr(values);
    rep.mean = ms.mean;
    rep.sigma = ms.stderr_ * std::sqrt(static_cast<double>(trials));
    double const med = lower_median(values);
    std::vector<double> thresholds;
    for (std::size_t j = 0; j < n_thresholds; ++j)
        thresholds.push_back(med + 4.0 * rep.sigma * static_cast<double>(j)
                                       / static_cast<double>(n_thresholds - 1));
    std::size_t dim = 0;
    for (auto const& b : measure.blocks)
        dim += b.dim();
    rep.tail = normlab::tail_from_samples(values, thresholds, normlab::TailMode::Absolute, dim, p);

    std::vector<double> x, y;
    for (std::size_t j = 0; j < rep.tail.thresholds.size(); ++j)
    {
        double const P = rep.tail.probability[j];
        double const hits = P * static_cast<double>(trials);
        if (hits >= 5 - 1e-9 && P < 1.0 && rep.tail.thresholds[j] > 0)
        {
            x.push_back(std::log(rep.tail.thresholds[j]));
            y.push_back(std::log(-std::log(P)));
        }
    }
    rep.fit_points = x.size();
    if (x.size() >= 3)
    {
        auto fit = least_squares(x, y);
        rep.fitted_power = fit.slope;
        rep.fit_ok = !fit.degenerate;
    }
    return rep;
}

}  // namespace randwave::wave
