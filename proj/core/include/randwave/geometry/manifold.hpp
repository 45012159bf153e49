#pragma once

#include <cstdint>
#include <string>

namespace randwave::geometry
{

enum class ManifoldKind
{
    Sphere,
    Torus
};

//! Unit sphere S^d or flat torus T^d = (R / 2 pi Z)^d.
struct ManifoldSpec
{
    ManifoldKind kind = ManifoldKind::Sphere;
    int d = 2;

    static ManifoldSpec sphere(int d);
    static ManifoldSpec torus(int d);

    double volume() const;
    std::string name() const;

    friend bool operator==(ManifoldSpec const&, ManifoldSpec const&) = default;
};

//! Half-open window (a, b] at semiclassical scale h.
struct FrequencyWindow
{
    double h = 1.0;
    double a = 0.0;
    double b = 1.0;

    //! Throws on h outside (0,1], a < 0 or b <= a.
    void validate() const;
    //! Frequency omega lies in the window iff h*omega in (a, b].
    bool contains(double omega) const;
    //! Width condition b - a >= D h.
    bool is_wide(double D) const { return b - a >= D * h; }

    friend bool operator==(FrequencyWindow const&,
                           FrequencyWindow const&) = default;
};

//! Dimension of degree-k spherical harmonics on S^d (d >= 2).
std::uint64_t sphere_harmonic_dim(int d, std::int64_t k);

//! sqrt(k (k + d - 1)).
double sphere_eigen_frequency(int d, std::int64_t k);

//! Number of n in Z^d with |n|^2 = k.
std::uint64_t representation_count(int d, std::int64_t k);

}  // namespace randwave::geometry
