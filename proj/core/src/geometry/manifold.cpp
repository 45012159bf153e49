#include "randwave/geometry/manifold.hpp"

#include <cmath>
#include <vector>

#include "randwave/common/special.hpp"
#include "randwave/common/types.hpp"

namespace randwave::geometry
{

ManifoldSpec ManifoldSpec::sphere(int d)
{
    RANDWAVE_REQUIRE(d >= 1, "sphere dimension must be >= 1");
    return {ManifoldKind::Sphere, d};
}

ManifoldSpec ManifoldSpec::torus(int d)
{
    RANDWAVE_REQUIRE(d >= 1, "torus dimension must be >= 1");
    return {ManifoldKind::Torus, d};
}

double ManifoldSpec::volume() const
{
    if (kind == ManifoldKind::Sphere)
        return sphere_surface_area(d);
    return std::pow(two_pi, d);
}

std::string ManifoldSpec::name() const
{
    return (kind == ManifoldKind::Sphere ? "S" : "T") + std::to_string(d);
}

void FrequencyWindow::validate() const
{
    RANDWAVE_REQUIRE(h > 0 && h <= 1, "window: h must lie in (0, 1]");
    RANDWAVE_REQUIRE(a >= 0, "window: a_h must be nonnegative");
    RANDWAVE_REQUIRE(b > a, "window: b_h must exceed a_h");
}

bool FrequencyWindow::contains(double omega) const
{
    double x = h * omega;
    return x > a && x <= b;
}

std::uint64_t sphere_harmonic_dim(int d, std::int64_t k)
{
    RANDWAVE_REQUIRE(d >= 2, "sphere_harmonic_dim: d must be >= 2");
    RANDWAVE_REQUIRE(k >= 0, "sphere_harmonic_dim: k must be >= 0");
    return binomial(k + d, d) - binomial(k + d - 2, d);
}

double sphere_eigen_frequency(int d, std::int64_t k)
{
    RANDWAVE_REQUIRE(k >= 0, "sphere_eigen_frequency: k must be >= 0");
    double kk = static_cast<double>(k);
    return std::sqrt(kk * (kk + d - 1));
}

namespace
{
// Points of Z^dims with squared norm exactly `rest`.
std::uint64_t count_shell(int dims, std::int64_t rest)
{
    if (rest < 0)
        return 0;
    if (dims == 0)
        return rest == 0 ? 1 : 0;
    std::uint64_t total = 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while ((r + 1) * (r + 1) <= rest)
        ++r;
    for (std::int64_t n = -r; n <= r; ++n)
        total += count_shell(dims - 1, rest - n * n);
    return total;
}
}  // namespace

std::uint64_t representation_count(int d, std::int64_t k)
{
    RANDWAVE_REQUIRE(d >= 1, "representation_count: d must be >= 1");
    RANDWAVE_REQUIRE(k >= 0, "representation_count: k must be >= 0");
    return count_shell(d, k);
}

}  // namespace randwave::geometry
