#include "randwave/normlab/norms.hpp"

#include <algorithm>
#include <cmath>

namespace randwave::normlab
{

double lq_norm(std::span<cplx const> samples, std::span<double const> weights, double q)
{
    RANDWAVE_REQUIRE(q >= 1, "lq_norm: q must be >= 1");
    RANDWAVE_REQUIRE(samples.size() == weights.size(), "lq_norm: size mismatch");
    double s = 0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        s += weights[i] * std::pow(std::abs(samples[i]), q);
    return std::pow(s, 1.0 / q);
}

double max_abs(std::span<cplx const> samples)
{
    double m = 0;
    for (cplx v : samples)
        m = std::max(m, std::abs(v));
    return m;
}

namespace
{
int quadrature_band(geometry::SpectralBlock const& block, double q)
{
    int band = block.band_limit();
    // |u|^q has degree q * band when q is even; at least exact for |u|^2
    return std::max(band, static_cast<int>(std::ceil(0.5 * q * band)));
}
}  // namespace

BlockNorms::BlockNorms(geometry::SpectralBlock const& block, Field field, double q)
    : q_(q)
{
    RANDWAVE_REQUIRE(q >= 1, "BlockNorms: q must be >= 1");
    lq_grid_ = std::make_shared<harmonics::BlockSynthesizer>(
        block, field, harmonics::GridKind::Quadrature, quadrature_band(block, q));
    sup_grid_ = std::make_shared<harmonics::BlockSynthesizer>(
        block, field, harmonics::GridKind::Sup);
}

double BlockNorms::lq_pow(std::span<cplx const> coeffs) const
{
    auto u = lq_grid_->synthesize(coeffs);
    auto w = lq_grid_->weights();
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += w[i] * std::pow(std::abs(u[i]), q_);
    return s;
}

double BlockNorms::lq(std::span<cplx const> coeffs) const
{
    return std::pow(lq_pow(coeffs), 1.0 / q_);
}

double BlockNorms::l2(std::span<cplx const> coeffs) const
{
    return lq_norm(lq_grid_->synthesize(coeffs), lq_grid_->weights(), 2.0);
}

double BlockNorms::linf(std::span<cplx const> coeffs) const
{
    return max_abs(sup_grid_->synthesize(coeffs));
}

double linf_norm(geometry::SpectralBlock const& block, Field field, std::span<cplx const> coeffs)
{
    harmonics::BlockSynthesizer grid(block, field, harmonics::GridKind::Sup);
    return max_abs(grid.synthesize(coeffs));
}

}  // namespace randwave::normlab
