#pragma once

#include <cstddef>
#include <vector>

namespace randwave::harmonics
{

//! Index of (l, m), 0 <= m <= l, in a packed Legendre triangle.
inline std::size_t legendre_index(int l, int m)
{
    return static_cast<std::size_t>(l) * (l + 1) / 2 + m;
}

/*!
 * Fully normalized associated Legendre functions P_lm(cos theta) for
 * l <= L, such that P_l0 = Y_l0 and sqrt(2) P_lm cos(m phi) is a unit
 * vector in L^2(S^2). Output is the packed triangle.
 */
void normalized_legendre(int L,
                         double cos_theta,
                         double sin_theta,
                         std::vector<double>& out);

//! Real orthonormal harmonics of degree k at (theta, phi), m = -k..k.
//! Negative m carries sin(|m| phi), positive m carries cos(m phi).
std::vector<double> eval_basis(int k, double theta, double phi);

//! Gauss-Legendre nodes and weights on [-1, 1] (n points).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace randwave::harmonics
