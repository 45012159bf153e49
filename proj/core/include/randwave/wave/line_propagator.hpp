#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "randwave/wave/damping.hpp"
#include "randwave/wave/wave_state.hpp"

namespace randwave::wave
{

enum class X1Part
{
    Full,  //!< C_0, C_1..C_M, S_1..S_M
    Even,  //!< C_0, C_1..C_M
    Odd    //!< S_1..S_M
};

/*!
 * One invariant subspace of the real field for damping that depends only
 * on x_1: functions phi(x_1) psi(x_2) with psi fixed to 1/sqrt(2 pi),
 * cos(n2 x2)/sqrt(pi) or sin(n2 x2)/sqrt(pi), and phi in the real basis
 * C_0 = 1/sqrt(2 pi), C_k = cos(k x)/sqrt(pi), S_k = sin(k x)/sqrt(pi),
 * k <= M = floor(sqrt(cutoff^2 - n2^2)). On T^1 the psi factor is absent.
 */
struct LineGroup
{
    int n2 = 0;
    bool x2_sine = false;
    X1Part part = X1Part::Full;
    int M = 0;

    //! Line basis: x1 wavenumber k and whether the element is a sine.
    std::vector<std::pair<int, bool>> basis() const;
    std::size_t dim() const;
};

//! Invariant groups covering |n| <= cutoff.
std::vector<LineGroup> line_groups(int d, int cutoff, bool split_parity);

//! Line coordinates (u0 then u1, each of size group.dim()) of a real state.
Eigen::VectorXd group_from_state(int d, LineGroup const& g, WaveState const& s);

//! Adds the real field described by the group coordinates to a state.
void add_group_to_state(int d, LineGroup const& g, Eigen::VectorXd const& coords, WaveState& s);

/*!
 * Real step matrices for the Strang scheme restricted to line groups.
 *
 * The damping matrix is the grid Galerkin product <phi_i, e^{-2 a dt} phi_j>
 * on the same padded grid as DampedWaveSolver, so both routes implement the
 * same discrete operator.
 */
class LinePropagator
{
  public:
    LinePropagator(DampingProfile const& damping, int d, int cutoff, double dt);

    double dt() const { return dt_; }
    int cutoff() const { return cutoff_; }
    bool split_parity() const { return split_parity_; }
    std::vector<LineGroup> groups() const { return line_groups(d_, cutoff_, split_parity_); }

    //! Frequencies sqrt(k^2 + n2^2) of the group's line basis.
    Eigen::VectorXd frequencies(LineGroup const& g) const;
    Eigen::MatrixXd damping_matrix(LineGroup const& g) const;
    //! One Strang step on (u0, u1).
    Eigen::MatrixXd step_matrix(LineGroup const& g) const;
    //! Step matrix raised to the n-th power by repeated squaring.
    Eigen::MatrixXd power(LineGroup const& g, std::size_t n) const;

  private:
    int d_;
    int cutoff_;
    double dt_;
    int grid_;
    bool undamped_;
    bool split_parity_;
    std::vector<double> decay_;  // e^{-2 a(x_g) dt}, x_g = 2 pi g / grid
};

//! Energy (1/2) sum (omega^2 u0^2 + u1^2) of group coordinates.
double group_energy(Eigen::VectorXd const& omega, Eigen::VectorXd const& coords);

}  // namespace randwave::wave
