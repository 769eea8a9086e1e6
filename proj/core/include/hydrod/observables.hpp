#pragma once

#include <cstdint>

#include "hydrod/solution.hpp"

namespace hydrod {

/// Mean radius statistics for one state. mean_mc/mc_sigma come from
/// rejection sampling of p(r) = R^2 r^(D-1); deterministic given seed.
struct RadiusStats {
    double mean_quadrature = 0.0; ///< Bohr
    double mean_mc = 0.0;         ///< Bohr
    double mc_sigma = 0.0;        ///< Bohr, standard error of the mean
    double most_probable = 0.0;   ///< Bohr
    long n_samples = 0;
    long n_accepted = 0;
    std::uint64_t seed = 0;
};

struct MostProbableRadius {
    double r = 0.0;
    bool boundary_peak = false; ///< density maximum sits on a grid boundary
};

/// Rescales so that the trapezoidal integral of R^2 r^(D-1) over the grid
/// is 1 (the hypersphere solid angle cancels between normalization and
/// expectation values and is left out). Idempotent and projective.
EigenSolution normalize(const EigenSolution& solution);

/// Trapezoidal integral of r R^2 r^(D-1). Requires a normalized input
/// (norm within 1e-3 of 1).
double mean_radius_quadrature(const EigenSolution& solution);

/// Rejection Monte Carlo estimate of the mean radius: uniform proposals on
/// [r_min, r_max], accepted with probability p(r)/p_max where p(r) is the
/// linearly interpolated density R^2 r^(D-1).
RadiusStats mean_radius_mc(const EigenSolution& solution, long n_samples, std::uint64_t seed);

/// Abscissa of the grid maximum of p(r) = R^2 r^(D-1), refined by a
/// parabolic fit through the peak and its neighbors. Ties resolve to the
/// lower radius.
MostProbableRadius most_probable_radius(const EigenSolution& solution);

} // namespace hydrod
