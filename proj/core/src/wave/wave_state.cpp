#include "randwave/wave/wave_state.hpp"

#include <cmath>

namespace randwave::wave
{

WaveState WaveState::zeros(int d, int cutoff)
{
    RANDWAVE_REQUIRE(d >= 1 && d <= 3, "WaveState: d must be 1, 2 or 3");
    RANDWAVE_REQUIRE(cutoff >= 0, "WaveState: cutoff must be >= 0");
    WaveState s;
    s.d = d;
    s.cutoff = cutoff;
    std::size_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= static_cast<std::size_t>(2 * cutoff + 1);
    s.u0.assign(total, 0.0);
    s.u1.assign(total, 0.0);
    return s;
}

std::size_t WaveState::index(std::vector<int> const& n) const
{
    RANDWAVE_REQUIRE(static_cast<int>(n.size()) == d, "WaveState: bad lattice point");
    std::size_t idx = 0;
    for (int v : n)
    {
        RANDWAVE_REQUIRE(std::abs(v) <= cutoff, "WaveState: mode outside box");
        idx = idx * static_cast<std::size_t>(extent()) + static_cast<std::size_t>(v + cutoff);
    }
    return idx;
}

std::vector<int> WaveState::lattice(std::size_t idx) const
{
    std::vector<int> n(d);
    auto const e = static_cast<std::size_t>(extent());
    for (int i = d - 1; i >= 0; --i)
    {
        n[i] = static_cast<int>(idx % e) - cutoff;
        idx /= e;
    }
    return n;
}

double WaveState::omega(std::size_t idx) const
{
    double s = 0;
    for (int v : lattice(idx))
        s += static_cast<double>(v) * v;
    return std::sqrt(s);
}

bool WaveState::in_disk(std::size_t idx) const
{
    long long s = 0;
    for (int v : lattice(idx))
        s += static_cast<long long>(v) * v;
    return s <= static_cast<long long>(cutoff) * cutoff;
}

double energy(WaveState const& s)
{
    double e = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        double w = s.omega(i);
        e += w * w * std::norm(s.u0[i]) + std::norm(s.u1[i]);
    }
    return 0.5 * e;
}

void free_rotate(WaveState& s, double t)
{
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        double w = s.omega(i);
        cplx a = s.u0[i], b = s.u1[i];
        if (w == 0.0)
        {
            s.u0[i] = a + t * b;
            continue;
        }
        double c = std::cos(w * t), sn = std::sin(w * t);
        s.u0[i] = c * a + (sn / w) * b;
        s.u1[i] = -w * sn * a + c * b;
    }
    s.t += t;
}

WaveState free_propagator(WaveState s, double t)
{
    free_rotate(s, t);
    return s;
}

}  // namespace randwave::wave
