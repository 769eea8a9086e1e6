#pragma once

#include <vector>

#include "hydrod/grid.hpp"
#include "hydrod/problem.hpp"

namespace hydrod {

/// A converged eigenstate of the reduced radial equation on a grid.
/// u is the reduced function (u = r^((D-1)/2) R), radial_samples is R.
struct EigenSolution {
    double energy = 0.0; ///< Hartree
    std::vector<double> u_samples;
    std::vector<double> r_samples;
    std::vector<double> radial_samples;
    int node_count = 0;
    double defect_residual = 0.0;
    ProblemSpec spec;
    RadialGrid grid;
};

} // namespace hydrod
