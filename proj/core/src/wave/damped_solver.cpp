#include "randwave/wave/damped_solver.hpp"

#include <algorithm>
#include <cmath>

#include "common/fft.hpp"

namespace randwave::wave
{

int damping_grid_size(int cutoff)
{
    return detail::fast_fft_size(4 * cutoff + 2);
}

DampedWaveSolver::DampedWaveSolver(DampingProfile const& damping, int d, int cutoff, double dt)
    : d_(d), cutoff_(cutoff), dt_(dt), grid_(damping_grid_size(cutoff))
{
    RANDWAVE_REQUIRE(damping.d() == d, "solver: damping dimension mismatch");
    RANDWAVE_REQUIRE(dt > 0, "solver: dt must be positive");
    RANDWAVE_REQUIRE(cutoff == 0 || dt <= 0.5 / cutoff + 1e-15,
                     "solver: dt must satisfy dt <= 0.5 / cutoff");
    damping.validate();
    undamped_ = damping.identically_zero();

    auto probe = WaveState::zeros(d, cutoff);
    std::size_t const n = probe.size();
    omega_.resize(n);
    cos_half_.resize(n);
    sin_half_.resize(n);
    slot_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double w = probe.in_disk(i) ? probe.omega(i) : 0.0;
        omega_[i] = w;
        cos_half_[i] = std::cos(0.5 * dt * w);
        sin_half_[i] = std::sin(0.5 * dt * w);
        std::size_t slot = 0;
        for (int v : probe.lattice(i))
            slot = slot * static_cast<std::size_t>(grid_)
                   + static_cast<std::size_t>(((v % grid_) + grid_) % grid_);
        slot_[i] = probe.in_disk(i) ? slot : static_cast<std::size_t>(-1);
    }

    std::size_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= static_cast<std::size_t>(grid_);
    a_grid_.resize(total);
    decay_.resize(total);
    std::vector<double> x(d);
    for (std::size_t g = 0; g < total; ++g)
    {
        std::size_t rest = g;
        for (int i = d - 1; i >= 0; --i)
        {
            x[i] = two_pi * static_cast<double>(rest % grid_) / grid_;
            rest /= static_cast<std::size_t>(grid_);
        }
        a_grid_[g] = damping.clipped(x);
        decay_[g] = std::exp(-2.0 * a_grid_[g] * dt);
    }
}

void DampedWaveSolver::half_rotate(WaveState& s) const
{
    double const tau = 0.5 * dt_;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (slot_[i] == static_cast<std::size_t>(-1))
            continue;
        double const w = omega_[i];
        cplx a = s.u0[i], b = s.u1[i];
        if (w == 0.0)
        {
            s.u0[i] = a + tau * b;
            continue;
        }
        double c = cos_half_[i], sn = sin_half_[i];
        s.u0[i] = c * a + (sn / w) * b;
        s.u1[i] = -w * sn * a + c * b;
    }
}

std::vector<cplx> DampedWaveSolver::to_grid(std::vector<cplx> const& coeffs) const
{
    std::vector<cplx> buf(a_grid_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (slot_[i] != static_cast<std::size_t>(-1))
            buf[slot_[i]] = coeffs[i];
    detail::fft_inplace(buf, std::vector<int>(d_, grid_), detail::FftDirection::Backward);
    return buf;
}

void DampedWaveSolver::step(WaveState& s) const
{
    RANDWAVE_REQUIRE(s.d == d_ && s.cutoff == cutoff_, "solver: state shape mismatch");
    half_rotate(s);
    if (!undamped_)
    {
        auto buf = to_grid(s.u1);
        for (std::size_t g = 0; g < buf.size(); ++g)
            buf[g] *= decay_[g];
        detail::fft_inplace(buf, std::vector<int>(d_, grid_), detail::FftDirection::Forward);
        double const inv = 1.0 / static_cast<double>(buf.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (slot_[i] != static_cast<std::size_t>(-1))
                s.u1[i] = buf[slot_[i]] * inv;
    }
    half_rotate(s);
    s.t += dt_;
}

double DampedWaveSolver::dissipation_rate(WaveState const& s) const
{
    if (undamped_)
        return 0.0;
    auto buf = to_grid(s.u1);
    // u1(x) = sum c_n e^{inx} / (2pi)^{d/2}; weight (2pi/G)^d
    double const w = std::pow(two_pi / grid_, d_) * std::pow(two_pi, -static_cast<double>(d_));
    double acc = 0;
    for (std::size_t g = 0; g < buf.size(); ++g)
        acc += a_grid_[g] * std::norm(buf[g]);
    return 2.0 * w * acc;
}

Trajectory damped_evolve(WaveState const& initial,
                         DampingProfile const& damping,
                         double t_final,
                         double dt,
                         std::size_t store_every)
{
    RANDWAVE_REQUIRE(t_final >= 0, "damped_evolve: t_final must be >= 0");
    RANDWAVE_REQUIRE(dt > 0, "damped_evolve: dt must be positive");
    RANDWAVE_REQUIRE(initial.cutoff == 0 || dt <= 0.5 / initial.cutoff,
                     "damped_evolve: unstable dt (need dt <= 0.5 / cutoff)");
    store_every = std::max<std::size_t>(store_every, 1);
    auto const steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-12));
    double const h = steps == 0 ? dt : t_final / static_cast<double>(steps);
    DampedWaveSolver solver(damping, initial.d, initial.cutoff, h);

    Trajectory tr;
    WaveState s = initial;
    auto record = [&] {
        tr.times.push_back(s.t);
        tr.energies.push_back(energy(s));
        tr.dissipation_rates.push_back(solver.dissipation_rate(s));
        tr.states.push_back(s);
    };
    record();
    for (std::size_t n = 1; n <= steps; ++n)
    {
        solver.step(s);
        if (n % store_every == 0 || n == steps)
            record();
    }
    return tr;
}

double dissipation_residual(Trajectory const& tr)
{
    RANDWAVE_REQUIRE(!tr.times.empty(), "dissipation_residual: empty trajectory");
    double integral = 0;
    for (std::size_t i = 1; i < tr.times.size(); ++i)
        integral += 0.5 * (tr.times[i] - tr.times[i - 1])
                    * (tr.dissipation_rates[i] + tr.dissipation_rates[i - 1]);
    return std::abs(tr.energies.front() - tr.energies.back() - integral);
}

}  // namespace randwave::wave
