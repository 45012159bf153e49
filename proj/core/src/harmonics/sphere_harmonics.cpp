#include "randwave/harmonics/sphere_harmonics.hpp"

#include <cmath>
#include <numbers>

#include "randwave/common/types.hpp"

namespace randwave::harmonics
{

void normalized_legendre(int L,
                         double cos_theta,
                         double sin_theta,
                         std::vector<double>& out)
{
    RANDWAVE_REQUIRE(L >= 0, "normalized_legendre: L must be >= 0");
    out.assign(legendre_index(L, L) + 1, 0.0);
    double const x = cos_theta;
    double const s = std::abs(sin_theta);

    double pmm = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    for (int m = 0; m <= L; ++m)
    {
        if (m > 0)
            pmm *= std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
        out[legendre_index(m, m)] = pmm;
        if (m == L)
            break;
        double p_lm2 = pmm;
        double p_lm1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
        out[legendre_index(m + 1, m)] = p_lm1;
        for (int l = m + 2; l <= L; ++l)
        {
            double const ll = l, mm = m;
            double a = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - mm * mm));
            double b = std::sqrt(((ll - 1) * (ll - 1) - mm * mm)
                                 / (4.0 * (ll - 1) * (ll - 1) - 1.0));
            double p = a * (x * p_lm1 - b * p_lm2);
            out[legendre_index(l, m)] = p;
            p_lm2 = p_lm1;
            p_lm1 = p;
        }
    }
}

std::vector<double> eval_basis(int k, double theta, double phi)
{
    RANDWAVE_REQUIRE(k >= 0, "eval_basis: k must be >= 0");
    RANDWAVE_REQUIRE(std::isfinite(theta) && std::isfinite(phi),
                     "eval_basis: non-finite angle");
    std::vector<double> plm;
    normalized_legendre(k, std::cos(theta), std::sin(theta), plm);
    std::vector<double> values(2 * k + 1);
    values[k] = plm[legendre_index(k, 0)];
    for (int m = 1; m <= k; ++m)
    {
        double p = std::numbers::sqrt2 * plm[legendre_index(k, m)];
        values[k + m] = p * std::cos(m * phi);
        values[k - m] = p * std::sin(m * phi);
    }
    return values;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    RANDWAVE_REQUIRE(n >= 1, "gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1, p1 = x;
            for (int l = 2; l <= n; ++l)
            {
                double p2 = ((2.0 * l - 1) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            double pn = n == 1 ? x : p1;
            double pnm1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pnm1) / (x * x - 1.0);
            double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        {
            double p0 = 1, p1 = x;
            for (int l = 2; l <= n; ++l)
            {
                double p2 = ((2.0 * l - 1) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            double pn = n == 1 ? x : p1;
            double pnm1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pnm1) / (x * x - 1.0);
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0.0;
}

}  // namespace randwave::harmonics
