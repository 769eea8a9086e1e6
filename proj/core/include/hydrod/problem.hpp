#pragma once

namespace hydrod {

/// One physical problem in Hartree atomic units: a hydrogen atom in a flat
/// D-dimensional Euclidean space with orbital angular momentum l.
///
/// j_index  = l + (D-3)/2 couples the centrifugal term;
/// coupling = 2 Gamma(D/2) / (pi^((D-2)/2) (D-2)) * charge_scale^2 is the
/// Gauss-law Coulomb strength c_D in Hartree * Bohr^(D-2).
struct ProblemSpec {
    int dimension = 3;
    int angular_momentum = 0;
    double j_index = 0.0;
    double coupling = 1.0;
    double charge_scale = 1.0;
};

/// Validates and builds a ProblemSpec. Pure: identical inputs yield
/// bitwise-identical specs.
///
/// Rejects D < 3 (the D = 2 Coulomb law divides by D-2; D < 3 is outside the
/// model) and D > 30 (r^(D-2) under/overflows the grid range beyond that).
ProblemSpec make_problem(int dimension, int angular_momentum, double charge_scale = 1.0);

} // namespace hydrod
