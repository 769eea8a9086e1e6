#pragma once

#include "hydrod/problem.hpp"

namespace hydrod {

/// Location and height of the centrifugal barrier of U_eff, when one exists
/// (D >= 5, j > 0, c_D > 0). Non-existence is a value, not an error.
struct BarrierInfo {
    bool exists = false;
    double r_peak = 0.0; ///< Bohr
    double u_max = 0.0;  ///< Hartree
};

/// Electrostatic energy -c_D / r^(D-2), Hartree. Strictly negative and
/// strictly increasing in r.
double coulomb_energy(double r, const ProblemSpec& spec);

/// coulomb_energy(r) + j(j+1)/(2 r^2), Hartree.
double effective_potential(double r, const ProblemSpec& spec);

/// Closed-form stationary point of the effective potential:
/// r_peak^(D-4) = (D-2) c_D / (j(j+1)), u_max = U_eff(r_peak).
BarrierInfo barrier(const ProblemSpec& spec);

/// Radius at which U_eff crosses zero for D >= 5 (attractive core inside,
/// centrifugal tail outside): r0^(D-4) = 2 c_D / (j(j+1)).
double core_crossing_radius(const ProblemSpec& spec);

/// Net coefficient of the 1/r^2 potential at D = 4: j(j+1)/2 - c_4.
/// Positive for charge_scale = 1 and every l, i.e. purely repulsive.
double net_inverse_square_coefficient(const ProblemSpec& spec);

/// Semiclassical Bohr-orbit reference energy in D dimensions (diagnostic
/// only): E = (D-4)/(2(D-2)) * n^(-(2D-4)/(4-D)), Hartree. D = 4 is a
/// domain error (singular exponent).
double ehrenfest_energy(int dimension, int principal_n);

} // namespace hydrod
