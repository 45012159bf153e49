#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "randwave/common/stats.hpp"
#include "randwave/common/types.hpp"
#include "randwave/ensembles/kakutani.hpp"
#include "randwave/ensembles/measure.hpp"
#include "randwave/ensembles/moments.hpp"
#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/ensembles/samplers.hpp"
#include "randwave/normlab/closed_form.hpp"

using namespace randwave;
using namespace randwave::ensembles;

TEST_CASE("philox4x32-10 known answers")
{
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0})
          == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff})
          == PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0})
          == PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct")
{
    RngStream a(42, 7), b(42, 7), c(42, 8);
    bool differs = false;
    for (int i = 0; i < 1000; ++i)
    {
        auto x = a.next_u64();
        REQUIRE(x == b.next_u64());
        differs = differs || x != c.next_u64();
    }
    CHECK(differs);
    RngStream p(1, 0);
    CHECK(p.child(3).next_u64() == p.child(3).next_u64());
    CHECK(p.child(3).next_u64() != p.child(4).next_u64());

    RngStream u(5, 0);
    std::vector<double> xs(100000), zs(100000);
    for (auto& x : xs)
        x = u.uniform();
    for (auto& z : zs)
        z = u.normal();
    CHECK(ks_distance(xs, [](double t) { return std::clamp(t, 0.0, 1.0); }) < 0.01);
    CHECK(ks_distance(zs, [](double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }) < 0.01);
}

TEST_CASE("uniform sphere sampler")
{
    RngStream rng(1, 1);
    for (Field f : {Field::Real, Field::Complex})
        for (std::size_t N : {1u, 2u, 17u})
        {
            auto z = sample_sphere_uniform(N, f, rng);
            double n2 = 0;
            for (auto v : z)
            {
                n2 += std::norm(v);
                if (f == Field::Real)
                    CHECK(v.imag() == 0.0);
            }
            CHECK(std::abs(n2 - 1.0) <= 1e-12);
        }
    auto one = sample_sphere_uniform(1, Field::Complex, rng);
    CHECK(std::abs(std::abs(one[0]) - 1.0) <= 1e-15);
    CHECK_THROWS_AS(sample_sphere_uniform(0, Field::Real, rng), InvalidArgument);
}

TEST_CASE("coordinate law on the complex sphere, N = 16")
{
    RngStream base(2024, 0);
    std::vector<double> xs(100000);
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        RngStream rng = base.child(i);
        xs[i] = std::abs(sample_sphere_uniform(16, Field::Complex, rng)[0]);
    }
    double ks = ks_distance(xs, [](double t) { return 1.0 - std::pow(1.0 - std::min(t * t, 1.0), 15); });
    CHECK(ks <= 0.01);
}

TEST_CASE("rotation invariance of the sphere law")
{
    RngStream rng(77, 0);
    Eigen::MatrixXcd Q = sample_haar_basis(16, Field::Real, rng);
    std::vector<double> plain, rotated;
    for (int i = 0; i < 10000; ++i)
    {
        auto z = sample_sphere_uniform(16, Field::Real, rng);
        Eigen::VectorXcd v = Eigen::Map<Eigen::VectorXcd>(z.data(), 16);
        plain.push_back(v(0).real());
        rotated.push_back((Q * v)(0).real());
    }
    std::vector<double> fresh;
    for (int i = 0; i < 10000; ++i)
        fresh.push_back(sample_sphere_uniform(16, Field::Real, rng)[0].real());
    CHECK(ks_two_sample(rotated, fresh) <= 0.02);
    CHECK(ks_two_sample(plain, fresh) <= 0.02);
}

TEST_CASE("haar bases")
{
    RngStream rng(8, 0);
    int plus = 0;
    for (int i = 0; i < 2000; ++i)
    {
        auto q = sample_haar_basis(1, Field::Real, rng);
        CHECK(std::abs(std::abs(q(0, 0)) - 1.0) < 1e-15);
        plus += q(0, 0).real() > 0 ? 1 : 0;
    }
    auto ci = wilson_interval(static_cast<std::size_t>(plus), 2000, 3.0);
    CHECK(ci.lo <= 0.5);
    CHECK(ci.hi >= 0.5);

    for (Field f : {Field::Real, Field::Complex})
        for (std::size_t N : {2u, 7u, 30u})
        {
            auto B = sample_haar_basis(N, f, rng);
            auto const n = static_cast<Eigen::Index>(N);
            CHECK((B.adjoint() * B - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
        }

    std::vector<double> col, direct;
    RngStream r2(9, 0);
    for (int i = 0; i < 10000; ++i)
    {
        col.push_back(std::abs(sample_haar_basis(8, Field::Complex, r2)(0, 0)));
        direct.push_back(std::abs(sample_sphere_uniform(8, Field::Complex, r2)[0]));
    }
    CHECK(ks_two_sample(col, direct) <= 0.02);
}

TEST_CASE("block field sampler")
{
    RngStream rng(3, 3);
    auto u = sample_block_field(10, 1.0, RadialLaw::dirac(1.0), Field::Real, rng);
    double n2 = 0;
    for (auto v : u)
        n2 += std::norm(v);
    CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
    for (auto v : sample_block_field(10, 1.0, RadialLaw::dirac(0.0), Field::Real, rng))
        CHECK(v == cplx{});

    std::vector<double> sq;
    RngStream base(4, 0);
    for (int i = 0; i < 10000; ++i)
    {
        RngStream r = base.child(static_cast<std::uint64_t>(i));
        double s = 0;
        for (auto v : sample_block_field(32, 2.0, RadialLaw::half_gaussian(), Field::Real, r))
            s += std::norm(v);
        sq.push_back(s);
    }
    auto ms = mean_stderr(sq);
    CHECK(std::abs(ms.mean - 4.0) <= 3 * ms.stderr_);
}

TEST_CASE("half-gaussian second moment by quadrature")
{
    double s = 0;
    double const dr = 1e-4;
    for (double r = 0.5 * dr; r < 12; r += dr)
        s += r * r * std::sqrt(2 / pi) * std::exp(-r * r / 2) * dr;
    CHECK(s == doctest::Approx(RadialLaw::half_gaussian().second_moment()).epsilon(1e-8));
}

TEST_CASE("half-gaussian tail class")
{
    RngStream rng(6, 0);
    auto law = RadialLaw::half_gaussian();
    CHECK(law.tail_gamma() == 2.0);
    CHECK(std::isinf(RadialLaw::dirac(1).tail_gamma()));
    std::vector<double> rs(1000000);
    for (auto& r : rs)
        r = law.sample(rng);
    for (double rho : {1.0, 2.0, 3.0})
    {
        double count = 0;
        for (double r : rs)
            count += r > rho ? 1 : 0;
        double const p = count / static_cast<double>(rs.size());
        CHECK(p <= law.tail_C() * std::exp(-law.tail_c() * rho * rho) * 1.05);
    }
}

TEST_CASE("full field sampler")
{
    auto zero = dyadic_torus_measure(1, 3, {0, 0, 0, 0}, RadialLaw::half_gaussian());
    RngStream rng(1, 2);
    CHECK(sample_full_field(zero, rng).l2_norm_sq() == 0.0);

    auto one_hot = dyadic_torus_measure(2, 3, {0, 0, 1.5, 0}, RadialLaw::half_gaussian());
    RngStream r1(10, 0), r2(10, 0);
    auto full = sample_full_field(one_hot, r1);
    RngStream r2k = r2.child(2);
    auto block = sample_block_field(one_hot.blocks[2].dim(), 1.5, RadialLaw::half_gaussian(), Field::Real, r2k);
    CHECK(full.blocks[2] == block);

    std::vector<double> alpha{1.0, 0.5, 0.25, 0.125};
    auto dirac = dyadic_torus_measure(1, 3, alpha, RadialLaw::dirac(1.0));
    double expected = 0;
    for (double a : alpha)
        expected += a * a;
    RngStream base(12, 0);
    for (int i = 0; i < 100; ++i)
    {
        RngStream r = base.child(static_cast<std::uint64_t>(i));
        auto u = sample_full_field(dirac, r);
        REQUIRE(u.l2_norm_sq() == doctest::Approx(expected).epsilon(1e-12));
        REQUIRE(sobolev_norm(u, dirac.scales, 1.0) == doctest::Approx([&] {
                    auto m = dirac;
                    m.s = 1.0;
                    return m.alpha_norm_sq();
                }()).epsilon(1e-12));
    }
}

TEST_CASE("sobolev norm examples")
{
    RandomFieldCoeffs u;
    u.blocks = {{cplx{1.0, 0.0}}};
    std::vector<double> a1{1.0};
    CHECK(sobolev_norm(u, a1, 0.0) == doctest::Approx(1.0));
    std::vector<double> a3{3.0};
    CHECK(sobolev_norm(u, a3, 1.0) == doctest::Approx(10.0));
    u.blocks = {{cplx{1.0, 0.0}}, {cplx{0.0, 1.0}}};
    std::vector<double> a12{1.0, 2.0};
    CHECK(sobolev_norm(u, a12, -1.0) == doctest::Approx(0.5 + 0.2));
}

TEST_CASE("divergent sobolev sums grow with truncation")
{
    double prev = 0;
    for (int K : {4, 8, 12})
    {
        auto m = dyadic_torus_measure(1, K, std::vector<double>(static_cast<std::size_t>(K + 1), 1.0),
                                      RadialLaw::dirac(1.0), 1.0);
        double const total = m.alpha_norm_sq();
        CHECK(total > 2 * prev);
        prev = total;
    }
}

TEST_CASE("kakutani affinity terms")
{
    auto hg = RadialLaw::half_gaussian();
    double const a = 0.7, b = 1.9;
    double expected = std::sqrt(2 * a * b / (a * a + b * b));
    CHECK(kakutani_affinity_term({hg, a}, {hg, b}) == doctest::Approx(expected).epsilon(1e-14));
    double quad = 0;
    double const dr = 1e-4;
    for (double r = 0.5 * dr; r < 20; r += dr)
    {
        double f = std::sqrt(2 / pi) / a * std::exp(-r * r / (2 * a * a));
        double g = std::sqrt(2 / pi) / b * std::exp(-r * r / (2 * b * b));
        quad += std::sqrt(f * g) * dr;
    }
    CHECK(quad == doctest::Approx(expected).epsilon(1e-8));
    CHECK(kakutani_affinity_term({RadialLaw::dirac(1), 2.0}, {RadialLaw::dirac(2), 1.0}) == 1.0);
    CHECK(kakutani_affinity_term({RadialLaw::dirac(1), 2.0}, {RadialLaw::dirac(1), 1.0}) == 0.0);
    CHECK(kakutani_affinity_term({hg, 1.0}, {RadialLaw::dirac(1), 1.0}) == 0.0);
}

TEST_CASE("kakutani verdicts")
{
    auto hg = RadialLaw::half_gaussian();
    std::vector<ScaledLaw> s1, s2, s3, s4;
    for (int k = 1; k <= 100; ++k)
    {
        double const a = std::pow(2.0, -k / 4.0);
        s1.push_back({hg, a});
        s2.push_back({hg, a * (1 + 1.0 / k)});
        s3.push_back({RadialLaw::dirac(1), a});
    }
    auto same = kakutani_product(s1, s1);
    CHECK(same.verdict == KakutaniVerdict::Equivalent);
    CHECK(same.partial_product == 1.0);
    CHECK(kakutani_product(s1, s2).verdict == KakutaniVerdict::Equivalent);
    auto mixed = kakutani_product(s1, s3);
    CHECK(mixed.verdict == KakutaniVerdict::Singular);
    s4 = s1;
    for (std::size_t k = 0; k < s4.size(); ++k)
        s4[k].scale *= 2.0;
    auto doubled = kakutani_product(s1, s4);
    CHECK(doubled.terms[0] == doctest::Approx(std::sqrt(0.8)).epsilon(1e-14));
    CHECK(doubled.partial_product == doctest::Approx(std::pow(0.8, 50)).epsilon(1e-10));
}

TEST_CASE("moment inequality")
{
    for (int q : {1, 2, 3, 5})
    {
        auto one = rademacher_moment_exact(1, q);
        CHECK(one.lhs == 1.0);
        CHECK(one.rhs == doctest::Approx(std::pow(q, q)));
        CHECK(one.holds);
    }
    auto r = rademacher_moment_exact(4, 2);
    CHECK(r.lhs == 40.0);
    CHECK(r.rhs == 64.0);
    CHECK(r.holds);
    auto g = moment_inequality_check(gaussian_sampler(8), 3, 1000000, RngStream(5, 0), 1);
    CHECK(g.holds);
    CHECK(g.lhs == doctest::Approx(15.0 * 512).epsilon(0.05));
}
