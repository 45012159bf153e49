#include "randwave/geometry/spectral_block.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "randwave/common/types.hpp"

namespace randwave::geometry
{

int SpectralBlock::band_limit() const
{
    int L = 0;
    for (auto const& m : modes)
    {
        L = std::max(L, m.degree);
        for (int n : m.lattice)
            L = std::max(L, std::abs(n));
    }
    return L;
}

double SpectralBlock::max_frequency() const
{
    double w = 0;
    for (auto const& m : modes)
        w = std::max(w, m.omega);
    return w;
}

namespace
{
void check_width(SpectralBlock& block, double D)
{
    if (!block.window.is_wide(D))
    {
        std::ostringstream os;
        os << "window width " << block.window.b - block.window.a
           << " is below D*h = " << D * block.window.h;
        block.warnings.push_back(os.str());
    }
}

void enumerate_box(int d,
                   int bound,
                   std::vector<int>& n,
                   int axis,
                   FrequencyWindow const& w,
                   std::vector<SpectralMode>& out)
{
    if (axis == d)
    {
        long long sq = 0;
        for (int v : n)
            sq += static_cast<long long>(v) * v;
        double omega = std::sqrt(static_cast<double>(sq));
        if (w.contains(omega))
            out.push_back({0, 0, n, omega});
        return;
    }
    for (int v = -bound; v <= bound; ++v)
    {
        n[axis] = v;
        enumerate_box(d, bound, n, axis + 1, w, out);
    }
}
}  // namespace

SpectralBlock torus_modes_in_window(int d, FrequencyWindow const& window, double D)
{
    RANDWAVE_REQUIRE(d >= 1, "torus dimension must be >= 1");
    window.validate();
    SpectralBlock block{ManifoldSpec::torus(d), window, {}, {}};
    int bound = static_cast<int>(std::ceil(window.b / window.h));
    std::vector<int> n(d, 0);
    enumerate_box(d, bound, n, 0, window, block.modes);
    check_width(block, D);
    return block;
}

namespace
{
void append_degree(SpectralBlock& block, int k)
{
    double omega = sphere_eigen_frequency(2, k);
    for (int m = -k; m <= k; ++m)
        block.modes.push_back({k, m, {}, omega});
}
}  // namespace

SpectralBlock sphere_modes_in_window(FrequencyWindow const& window, double D)
{
    window.validate();
    SpectralBlock block{ManifoldSpec::sphere(2), window, {}, {}};
    for (int k = 0;; ++k)
    {
        double omega = sphere_eigen_frequency(2, k);
        if (window.h * omega > window.b)
            break;
        if (window.contains(omega))
            append_degree(block, k);
    }
    check_width(block, D);
    return block;
}

SpectralBlock sphere_degree_block(int k)
{
    return sphere_degree_range_block(k, k);
}

SpectralBlock sphere_degree_range_block(int k_lo, int k_hi)
{
    RANDWAVE_REQUIRE(k_lo >= 0 && k_hi >= k_lo, "invalid degree range");
    double lo = k_lo == 0 ? 0.0
                          : 0.5 * (sphere_eigen_frequency(2, k_lo - 1)
                                   + sphere_eigen_frequency(2, k_lo));
    double hi = std::max(sphere_eigen_frequency(2, k_hi), 1e-12);
    SpectralBlock block{ManifoldSpec::sphere(2), {1.0, lo, hi}, {}, {}};
    for (int k = k_lo; k <= k_hi; ++k)
        append_degree(block, k);
    check_width(block, default_block_width);
    return block;
}

SpectralBlock torus_shell_block(int d, std::int64_t k)
{
    RANDWAVE_REQUIRE(k >= 1, "torus_shell_block: k must be >= 1");
    double r = std::sqrt(static_cast<double>(k));
    double below = std::sqrt(static_cast<double>(k - 1));
    FrequencyWindow w{1.0, 0.5 * (r + below), r};
    // floating sqrt of a perfect square is exact, so the shell is isolated
    return torus_modes_in_window(d, w, 0.0);
}

}  // namespace randwave::geometry
