#include "randwave/harmonics/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "common/fft.hpp"
#include "randwave/harmonics/sphere_harmonics.hpp"

namespace randwave::harmonics
{
using geometry::ManifoldKind;
using geometry::SpectralBlock;

namespace
{
bool lex_positive(std::vector<int> const& n)
{
    for (int v : n)
        if (v != 0)
            return v > 0;
    return false;
}

std::vector<int> negated(std::vector<int> n)
{
    for (int& v : n)
        v = -v;
    return n;
}

double torus_norm(int d)
{
    return std::pow(two_pi, -0.5 * d);
}
}  // namespace

BlockSynthesizer::BlockSynthesizer(SpectralBlock const& block,
                                   Field field,
                                   GridKind kind,
                                   int L)
    : block_(block), field_(field)
{
    RANDWAVE_REQUIRE(!block.empty(), "BlockSynthesizer: empty block");
    int const band = block.band_limit();
    if (L < 0)
        L = band;
    RANDWAVE_REQUIRE(L >= band, "BlockSynthesizer: grid below band limit");

    if (block.manifold.kind == ManifoldKind::Sphere)
    {
        RANDWAVE_REQUIRE(block.manifold.d == 2, "sphere synthesis needs S^2");
        grid_ = kind == GridKind::Quadrature ? SphereGrid::gauss(L)
                                             : SphereGrid::equiangular(L);
        n_points_ = grid_.size();
        if (kind == GridKind::Quadrature)
        {
            weights_.resize(n_points_);
            for (std::size_t i = 0; i < n_points_; ++i)
                weights_[i] = grid_.weight(i);
        }
        std::size_t const n_modes = block.dim();
        ring_table_.assign(grid_.theta.size() * n_modes, 0.0);
        std::vector<double> plm;
        for (std::size_t r = 0; r < grid_.theta.size(); ++r)
        {
            double th = grid_.theta[r];
            normalized_legendre(band, std::cos(th), std::sin(th), plm);
            for (std::size_t j = 0; j < n_modes; ++j)
            {
                auto const& m = block.modes[j];
                double v = plm[legendre_index(m.degree, std::abs(m.order))];
                if (m.order != 0)
                    v *= std::numbers::sqrt2;
                ring_table_[r * n_modes + j] = v;
            }
        }
        return;
    }

    int const d = block.manifold.d;
    extent_ = kind == GridKind::Quadrature
                  ? detail::fast_fft_size(2 * L + 1)
                  : detail::fast_fft_size(std::max(8 * L, 2 * L + 1));
    n_points_ = 1;
    for (int i = 0; i < d; ++i)
        n_points_ *= static_cast<std::size_t>(extent_);
    if (kind == GridKind::Quadrature)
        weights_.assign(n_points_, std::pow(two_pi / extent_, d));
    for (auto const& m : block.modes)
    {
        std::size_t slot = 0;
        for (int i = 0; i < d; ++i)
        {
            int idx = ((m.lattice[i] % extent_) + extent_) % extent_;
            slot = slot * static_cast<std::size_t>(extent_) + static_cast<std::size_t>(idx);
        }
        torus_slot_.push_back(slot);
    }
}

std::vector<double> BlockSynthesizer::point(std::size_t i) const
{
    RANDWAVE_REQUIRE(i < n_points_, "BlockSynthesizer::point: out of range");
    if (block_.manifold.kind == ManifoldKind::Sphere)
    {
        auto n_phi = static_cast<std::size_t>(grid_.n_phi);
        return {grid_.theta[i / n_phi], grid_.phi(static_cast<int>(i % n_phi))};
    }
    int const d = block_.manifold.d;
    std::vector<double> x(d);
    for (int axis = d - 1; axis >= 0; --axis)
    {
        x[axis] = two_pi * static_cast<double>(i % extent_) / extent_;
        i /= static_cast<std::size_t>(extent_);
    }
    return x;
}

std::vector<cplx> BlockSynthesizer::synthesize(std::span<cplx const> coeffs) const
{
    RANDWAVE_REQUIRE(coeffs.size() == block_.dim(), "synthesize: dimension mismatch");
    if (block_.manifold.kind == ManifoldKind::Sphere)
        return synthesize_sphere(coeffs);
    return synthesize_torus(coeffs);
}

std::vector<cplx> BlockSynthesizer::synthesize_sphere(std::span<cplx const> coeffs) const
{
    std::size_t const n_modes = block_.dim();
    int const n_phi = grid_.n_phi;
    std::vector<cplx> out(n_points_);
    cplx const minus_half_i{0.0, -0.5};
    for (std::size_t r = 0; r < grid_.theta.size(); ++r)
    {
        std::span<cplx> ring(out.data() + r * n_phi, static_cast<std::size_t>(n_phi));
        double const* row = ring_table_.data() + r * n_modes;
        for (std::size_t j = 0; j < n_modes; ++j)
        {
            cplx v = row[j] * coeffs[j];
            int m = block_.modes[j].order;
            if (m == 0)
            {
                ring[0] += v;
            }
            else if (m > 0)
            {
                ring[m] += 0.5 * v;
                ring[n_phi - m] += 0.5 * v;
            }
            else
            {
                // sin(|m| phi) = (e^{i|m|phi} - e^{-i|m|phi}) / 2i
                ring[-m] += minus_half_i * v;
                ring[n_phi + m] -= minus_half_i * v;
            }
        }
        detail::fft_inplace(ring, {n_phi}, detail::FftDirection::Backward);
    }
    return out;
}

std::vector<cplx> BlockSynthesizer::synthesize_torus(std::span<cplx const> coeffs) const
{
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    if (field_ == Field::Real)
        c = torus_real_to_complex(block_, coeffs);
    std::vector<cplx> out(n_points_);
    double const norm = torus_norm(block_.manifold.d);
    for (std::size_t j = 0; j < c.size(); ++j)
        out[torus_slot_[j]] += norm * c[j];
    std::vector<int> dims(block_.manifold.d, extent_);
    detail::fft_inplace(out, dims, detail::FftDirection::Backward);
    return out;
}

std::vector<cplx> torus_real_to_complex(SpectralBlock const& block,
                                        std::span<cplx const> coeffs)
{
    RANDWAVE_REQUIRE(coeffs.size() == block.dim(), "torus_real_to_complex: dimension mismatch");
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t j = 0; j < block.dim(); ++j)
        index.emplace(block.modes[j].lattice, j);
    std::vector<cplx> out(coeffs.size());
    double const s = 1.0 / std::numbers::sqrt2;
    for (std::size_t j = 0; j < block.dim(); ++j)
    {
        auto const& n = block.modes[j].lattice;
        if (!lex_positive(n))
        {
            if (std::all_of(n.begin(), n.end(), [](int v) { return v == 0; }))
                out[j] = coeffs[j];
            continue;
        }
        auto it = index.find(negated(n));
        RANDWAVE_REQUIRE(it != index.end(), "torus block is not symmetric under n -> -n");
        cplx xc = coeffs[j];
        cplx xs = coeffs[it->second];
        out[j] = s * (xc - cplx{0, 1} * xs);
        out[it->second] = s * (xc + cplx{0, 1} * xs);
    }
    return out;
}

std::vector<cplx> eval_block_basis(SpectralBlock const& block,
                                   Field field,
                                   std::vector<double> const& point)
{
    std::vector<cplx> values(block.dim());
    if (block.manifold.kind == ManifoldKind::Sphere)
    {
        RANDWAVE_REQUIRE(point.size() == 2, "sphere point needs (theta, phi)");
        std::map<int, std::vector<double>> by_degree;
        for (std::size_t j = 0; j < block.dim(); ++j)
        {
            auto const& m = block.modes[j];
            auto it = by_degree.find(m.degree);
            if (it == by_degree.end())
                it = by_degree.emplace(m.degree, eval_basis(m.degree, point[0], point[1])).first;
            values[j] = it->second[static_cast<std::size_t>(m.degree + m.order)];
        }
        return values;
    }
    int const d = block.manifold.d;
    RANDWAVE_REQUIRE(static_cast<int>(point.size()) == d, "torus point has wrong dimension");
    double const norm = torus_norm(d);
    for (std::size_t j = 0; j < block.dim(); ++j)
    {
        auto const& n = block.modes[j].lattice;
        double phase = 0;
        for (int i = 0; i < d; ++i)
            phase += n[i] * point[i];
        if (field == Field::Complex)
        {
            values[j] = norm * std::polar(1.0, phase);
        }
        else if (lex_positive(n))
        {
            values[j] = norm * std::numbers::sqrt2 * std::cos(phase);
        }
        else if (std::all_of(n.begin(), n.end(), [](int v) { return v == 0; }))
        {
            values[j] = norm;
        }
        else
        {
            // partner of the positive member p = -n: sin(p.x)
            values[j] = -norm * std::numbers::sqrt2 * std::sin(phase);
        }
    }
    return values;
}

std::vector<cplx> synthesize_direct(SpectralBlock const& block,
                                    Field field,
                                    std::span<cplx const> coeffs,
                                    std::vector<std::vector<double>> const& points)
{
    RANDWAVE_REQUIRE(coeffs.size() == block.dim(), "synthesize_direct: dimension mismatch");
    std::vector<cplx> out;
    out.reserve(points.size());
    for (auto const& p : points)
    {
        auto basis = eval_block_basis(block, field, p);
        cplx acc = 0;
        for (std::size_t j = 0; j < basis.size(); ++j)
            acc += coeffs[j] * basis[j];
        out.push_back(acc);
    }
    return out;
}

double kernel_e_xh(SpectralBlock const& block, std::vector<double> const& point)
{
    if (block.manifold.kind == ManifoldKind::Torus)
        return static_cast<double>(block.dim()) / block.manifold.volume();
    double s = 0;
    for (cplx v : eval_block_basis(block, Field::Real, point))
        s += std::norm(v);
    return s;
}

}  // namespace randwave::harmonics
