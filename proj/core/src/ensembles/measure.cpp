#include "randwave/ensembles/measure.hpp"

#include <cmath>

#include "randwave/ensembles/samplers.hpp"

namespace randwave::ensembles
{

RadialLaw RadialLaw::dirac(double r0)
{
    RANDWAVE_REQUIRE(r0 >= 0, "Dirac radial law needs r0 >= 0");
    return {RadialKind::Dirac, r0};
}

RadialLaw RadialLaw::half_gaussian()
{
    return {RadialKind::HalfGaussian, 0.0};
}

double RadialLaw::tail_gamma() const
{
    return kind == RadialKind::Dirac ? std::numeric_limits<double>::infinity() : 2.0;
}

double RadialLaw::second_moment() const
{
    return kind == RadialKind::Dirac ? r0 * r0 : 1.0;
}

double RadialLaw::sample(RngStream& rng) const
{
    if (kind == RadialKind::Dirac)
        return r0;
    return std::abs(rng.normal());
}

void MeasureSpec::validate() const
{
    std::size_t const K = blocks.size();
    RANDWAVE_REQUIRE(scales.size() == K && alpha.size() == K && laws.size() == K,
                     "MeasureSpec: per-block arrays must have equal length");
    for (std::size_t k = 0; k < K; ++k)
    {
        RANDWAVE_REQUIRE(alpha[k] >= 0, "MeasureSpec: alpha_k must be >= 0");
        RANDWAVE_REQUIRE(!blocks[k].empty(), "MeasureSpec: empty block");
        if (k > 0)
            RANDWAVE_REQUIRE(scales[k] > scales[k - 1],
                             "MeasureSpec: scales must increase strictly");
    }
}

double MeasureSpec::alpha_norm_sq() const
{
    double total = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k)
        total += alpha[k] * alpha[k] * std::pow(1.0 + scales[k] * scales[k], s);
    return total;
}

MeasureSpec dyadic_torus_measure(int d,
                                 int K,
                                 std::vector<double> alpha,
                                 RadialLaw law,
                                 double s,
                                 Field field)
{
    RANDWAVE_REQUIRE(K >= 0, "dyadic_torus_measure: K must be >= 0");
    RANDWAVE_REQUIRE(alpha.size() == static_cast<std::size_t>(K + 1),
                     "dyadic_torus_measure: need K+1 weights");
    MeasureSpec m;
    m.s = s;
    m.field = field;
    m.alpha = std::move(alpha);
    for (int k = 0; k <= K; ++k)
    {
        double hi = std::ldexp(1.0, k);
        geometry::FrequencyWindow w{1.0, 0.5 * hi, hi};
        m.blocks.push_back(geometry::torus_modes_in_window(d, w, 0.0));
        m.scales.push_back(hi);
        m.laws.push_back(law);
    }
    m.validate();
    return m;
}

double RandomFieldCoeffs::l2_norm_sq() const
{
    double total = 0;
    for (auto const& b : blocks)
        for (auto const& z : b)
            total += std::norm(z);
    return total;
}

CoeffVector sample_block_field(std::size_t N,
                               double alpha,
                               RadialLaw const& law,
                               Field field,
                               RngStream& rng)
{
    RANDWAVE_REQUIRE(N >= 1, "sample_block_field: empty block");
    RANDWAVE_REQUIRE(alpha >= 0, "sample_block_field: alpha must be >= 0");
    double r = law.sample(rng);
    CoeffVector omega = sample_sphere_uniform(N, field, rng);
    for (auto& z : omega)
        z *= r * alpha;
    return omega;
}

RandomFieldCoeffs sample_full_field(MeasureSpec const& measure, RngStream& rng)
{
    measure.validate();
    RandomFieldCoeffs u;
    for (std::size_t k = 0; k < measure.num_blocks(); ++k)
    {
        // one child stream per block keeps blocks independent of K_max
        RngStream block_rng = rng.child(k);
        u.blocks.push_back(sample_block_field(measure.blocks[k].dim(),
                                              measure.alpha[k],
                                              measure.laws[k],
                                              measure.field,
                                              block_rng));
    }
    return u;
}

double sobolev_norm(RandomFieldCoeffs const& u, std::span<double const> scales, double s)
{
    RANDWAVE_REQUIRE(scales.size() == u.blocks.size(), "sobolev_norm: scale count mismatch");
    double total = 0;
    for (std::size_t k = 0; k < u.blocks.size(); ++k)
    {
        double n2 = 0;
        for (auto const& z : u.blocks[k])
            n2 += std::norm(z);
        total += std::pow(1.0 + scales[k] * scales[k], s) * n2;
    }
    return total;
}

}  // namespace randwave::ensembles
