#include "randwave/wave/line_propagator.hpp"

#include <cmath>
#include <numbers>

#include "randwave/wave/damped_solver.hpp"

namespace randwave::wave
{
namespace
{
int isqrt(int v)
{
    int r = static_cast<int>(std::sqrt(static_cast<double>(v)));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

struct Term
{
    int n;
    cplx beta;
};

// Expansion of a real basis element in orthonormal exponentials e^{inx}/sqrt(2pi).
std::vector<Term> expand(int k, bool sine)
{
    double const r = 1.0 / std::numbers::sqrt2;
    if (k == 0)
        return {{0, 1.0}};
    if (!sine)
        return {{k, r}, {-k, r}};
    return {{k, cplx{0, -r}}, {-k, cplx{0, r}}};
}

double line_value(int k, bool sine, double x)
{
    if (k == 0)
        return 1.0 / std::sqrt(two_pi);
    double const s = 1.0 / std::sqrt(pi);
    return sine ? s * std::sin(k * x) : s * std::cos(k * x);
}

template <class F>
void for_each_coefficient(int d, LineGroup const& g, std::size_t i, F&& f)
{
    auto const b = g.basis()[i];
    auto xs = expand(b.first, b.second);
    if (d == 1)
    {
        for (auto const& t : xs)
            f(std::vector<int>{t.n}, t.beta);
        return;
    }
    auto ys = expand(g.n2, g.x2_sine);
    for (auto const& t1 : xs)
        for (auto const& t2 : ys)
            f(std::vector<int>{t1.n, t2.n}, t1.beta * t2.beta);
}
}  // namespace

std::vector<std::pair<int, bool>> LineGroup::basis() const
{
    std::vector<std::pair<int, bool>> b;
    if (part != X1Part::Odd)
        for (int k = 0; k <= M; ++k)
            b.emplace_back(k, false);
    if (part != X1Part::Even)
        for (int k = 1; k <= M; ++k)
            b.emplace_back(k, true);
    return b;
}

std::size_t LineGroup::dim() const
{
    switch (part)
    {
        case X1Part::Full:
            return static_cast<std::size_t>(2 * M + 1);
        case X1Part::Even:
            return static_cast<std::size_t>(M + 1);
        case X1Part::Odd:
            break;
    }
    return static_cast<std::size_t>(M);
}

std::vector<LineGroup> line_groups(int d, int cutoff, bool split_parity)
{
    RANDWAVE_REQUIRE(d == 1 || d == 2, "line groups exist for d = 1, 2");
    std::vector<X1Part> parts = split_parity ? std::vector<X1Part>{X1Part::Even, X1Part::Odd}
                                             : std::vector<X1Part>{X1Part::Full};
    std::vector<LineGroup> out;
    int const n2_max = d == 1 ? 0 : cutoff;
    for (int n2 = 0; n2 <= n2_max; ++n2)
    {
        int M = isqrt(cutoff * cutoff - n2 * n2);
        for (bool sine : {false, true})
        {
            if (sine && n2 == 0)
                continue;
            for (X1Part p : parts)
            {
                LineGroup g{n2, sine, p, M};
                if (g.dim() > 0)
                    out.push_back(g);
            }
        }
    }
    return out;
}

Eigen::VectorXd group_from_state(int d, LineGroup const& g, WaveState const& s)
{
    std::size_t const n = g.dim();
    Eigen::VectorXd coords = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
    {
        cplx a0 = 0, a1 = 0;
        for_each_coefficient(d, g, i, [&](std::vector<int> const& lat, cplx beta) {
            std::size_t idx = s.index(lat);
            a0 += s.u0[idx] * std::conj(beta);
            a1 += s.u1[idx] * std::conj(beta);
        });
        coords(static_cast<Eigen::Index>(i)) = a0.real();
        coords(static_cast<Eigen::Index>(n + i)) = a1.real();
    }
    return coords;
}

void add_group_to_state(int d, LineGroup const& g, Eigen::VectorXd const& coords, WaveState& s)
{
    std::size_t const n = g.dim();
    RANDWAVE_REQUIRE(static_cast<std::size_t>(coords.size()) == 2 * n, "group coordinates have wrong size");
    for (std::size_t i = 0; i < n; ++i)
    {
        double v0 = coords(static_cast<Eigen::Index>(i));
        double v1 = coords(static_cast<Eigen::Index>(n + i));
        for_each_coefficient(d, g, i, [&](std::vector<int> const& lat, cplx beta) {
            std::size_t idx = s.index(lat);
            s.u0[idx] += v0 * beta;
            s.u1[idx] += v1 * beta;
        });
    }
}

LinePropagator::LinePropagator(DampingProfile const& damping, int d, int cutoff, double dt)
    : d_(d), cutoff_(cutoff), dt_(dt), grid_(damping_grid_size(cutoff))
{
    RANDWAVE_REQUIRE(d == 1 || d == 2, "LinePropagator: d must be 1 or 2");
    RANDWAVE_REQUIRE(damping.d() == d, "LinePropagator: damping dimension mismatch");
    RANDWAVE_REQUIRE(damping.depends_only_on_x1(), "LinePropagator: damping must depend on x_1 only");
    RANDWAVE_REQUIRE(dt > 0 && (cutoff == 0 || dt <= 0.5 / cutoff + 1e-15),
                     "LinePropagator: dt must satisfy 0 < dt <= 0.5 / cutoff");
    damping.validate();
    undamped_ = damping.identically_zero();
    split_parity_ = damping.even_in_x1();
    decay_.resize(static_cast<std::size_t>(grid_));
    std::vector<double> x(d, 0.0);
    for (int gi = 0; gi < grid_; ++gi)
    {
        x[0] = two_pi * gi / grid_;
        decay_[static_cast<std::size_t>(gi)] = std::exp(-2.0 * damping.clipped(x) * dt);
    }
}

Eigen::VectorXd LinePropagator::frequencies(LineGroup const& g) const
{
    auto b = g.basis();
    Eigen::VectorXd w(static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        w(static_cast<Eigen::Index>(i)) = std::sqrt(static_cast<double>(b[i].first) * b[i].first
                                                    + static_cast<double>(g.n2) * g.n2);
    return w;
}

Eigen::MatrixXd LinePropagator::damping_matrix(LineGroup const& g) const
{
    auto const n = static_cast<Eigen::Index>(g.dim());
    if (undamped_)
        return Eigen::MatrixXd::Identity(n, n);
    auto b = g.basis();
    Eigen::MatrixXd phi(grid_, n);
    Eigen::VectorXd wf(grid_);
    for (int gi = 0; gi < grid_; ++gi)
    {
        double x = two_pi * gi / grid_;
        for (Eigen::Index j = 0; j < n; ++j)
            phi(gi, j) = line_value(b[static_cast<std::size_t>(j)].first,
                                    b[static_cast<std::size_t>(j)].second,
                                    x);
        wf(gi) = (two_pi / grid_) * decay_[static_cast<std::size_t>(gi)];
    }
    Eigen::MatrixXd D = phi.transpose() * wf.asDiagonal() * phi;
    return 0.5 * (D + D.transpose());
}

Eigen::MatrixXd LinePropagator::step_matrix(LineGroup const& g) const
{
    auto const n = static_cast<Eigen::Index>(g.dim());
    Eigen::VectorXd w = frequencies(g);
    double const tau = 0.5 * dt_;
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        double c = std::cos(w(i) * tau), s = std::sin(w(i) * tau);
        R(i, i) = c;
        R(i, n + i) = w(i) == 0.0 ? tau : s / w(i);
        R(n + i, i) = -w(i) * s;
        R(n + i, n + i) = c;
    }
    Eigen::MatrixXd B = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    B.bottomRightCorner(n, n) = damping_matrix(g);
    return R * B * R;
}

Eigen::MatrixXd LinePropagator::power(LineGroup const& g, std::size_t n) const
{
    Eigen::MatrixXd base = step_matrix(g);
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(base.rows(), base.cols());
    bool first = true;
    while (n > 0)
    {
        if (n & 1u)
        {
            result = first ? base : Eigen::MatrixXd(result * base);
            first = false;
        }
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

double group_energy(Eigen::VectorXd const& omega, Eigen::VectorXd const& coords)
{
    auto const n = omega.size();
    double e = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        e += omega(i) * omega(i) * coords(i) * coords(i) + coords(n + i) * coords(n + i);
    return 0.5 * e;
}

}  // namespace randwave::wave
