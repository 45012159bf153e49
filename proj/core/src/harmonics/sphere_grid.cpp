#include "randwave/harmonics/sphere_grid.hpp"

#include <algorithm>
#include <cmath>

#include "common/fft.hpp"
#include "randwave/common/types.hpp"
#include "randwave/harmonics/sphere_harmonics.hpp"

namespace randwave::harmonics
{

SphereGrid SphereGrid::gauss(int L)
{
    RANDWAVE_REQUIRE(L >= 0, "SphereGrid: L must be >= 0");
    SphereGrid g;
    g.L = L;
    std::vector<double> x, w;
    gauss_legendre(L + 1, x, w);
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        g.theta.push_back(std::acos(x[i]));
        g.ring_weight.push_back(w[i]);
    }
    g.n_phi = detail::fast_fft_size(2 * L + 1);
    return g;
}

SphereGrid SphereGrid::equiangular(int L)
{
    L = std::max(L, 1);
    SphereGrid g;
    g.L = L;
    int const rings = 4 * L + 1;
    for (int i = 0; i < rings; ++i)
    {
        g.theta.push_back(pi * i / (rings - 1));
        g.ring_weight.push_back(0.0);
    }
    g.n_phi = 8 * L;
    return g;
}

double SphereGrid::phi(int j) const
{
    return two_pi * j / n_phi;
}

double SphereGrid::weight(std::size_t node) const
{
    return ring_weight[node / static_cast<std::size_t>(n_phi)] * two_pi / n_phi;
}

double SphereGrid::total_weight() const
{
    double s = 0;
    for (double w : ring_weight)
        s += w;
    return s * two_pi;
}

}  // namespace randwave::harmonics
