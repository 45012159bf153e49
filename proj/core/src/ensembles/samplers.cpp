#include "randwave/ensembles/samplers.hpp"

#include <cmath>

namespace randwave::ensembles
{

CoeffVector sample_sphere_uniform(std::size_t N, Field field, RngStream& rng)
{
    RANDWAVE_REQUIRE(N >= 1, "sample_sphere_uniform: N must be >= 1");
    CoeffVector z(N);
    double norm2 = 0;
    for (auto& v : z)
    {
        double re = rng.normal();
        double im = field == Field::Complex ? rng.normal() : 0.0;
        v = {re, im};
        norm2 += re * re + im * im;
    }
    double const inv = 1.0 / std::sqrt(norm2);
    for (auto& v : z)
        v *= inv;
    return z;
}

Eigen::MatrixXcd sample_haar_basis(std::size_t N, Field field, RngStream& rng)
{
    RANDWAVE_REQUIRE(N >= 1, "sample_haar_basis: N must be >= 1");
    auto const n = static_cast<Eigen::Index>(N);
    if (field == Field::Real)
    {
        Eigen::MatrixXd g(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i)
                g(i, j) = rng.normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
        Eigen::MatrixXd const& r = qr.matrixQR();
        for (Eigen::Index j = 0; j < n; ++j)
            if (r(j, j) < 0)
                q.col(j) = -q.col(j);
        return q.cast<cplx>();
    }
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
        {
            double re = rng.normal();
            double im = rng.normal();
            g(i, j) = cplx{re, im};
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd const& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j)
    {
        double mag = std::abs(r(j, j));
        if (mag > 0)
            q.col(j) *= r(j, j) / mag;  // Q R = (Q D)(D^* R), D = phase(diag R)
    }
    return q;
}

}  // namespace randwave::ensembles
