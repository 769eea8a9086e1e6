#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrod/grid.hpp"
#include "hydrod/problem.hpp"
#include "hydrod/solution.hpp"

namespace hydrod {

struct ShootingConfig {
    double energy_lo = 0.0; ///< Hartree
    double energy_hi = 0.0; ///< Hartree
    int scan_points = 400;
    double bisection_rel_tol = 1e-10;
    int max_bisections = 200;
    /// Match index as a fraction of the grid; < 0 means "auto" (outermost
    /// classical turning point, mid-grid fallback).
    double match_fraction = -1.0;
};

struct DefectSample {
    double defect = 0.0;
    int nodes = 0;
};

/// No defect bracket with the requested node count exists in the energy
/// window. Expected outcome for D = 4 (purely repulsive net potential).
struct StateNotFound : std::runtime_error {
    int min_nodes_seen;
    int max_nodes_seen;
    StateNotFound(const std::string& what, int lo, int hi)
        : std::runtime_error(what), min_nodes_seen(lo), max_nodes_seen(hi) {}
};

/// Bidirectional shooting residual at energy E: propagates u forward from
/// u(r_min) = 0, u(r_min+h) = h and backward from u(r_max) = 0,
/// u(r_max-h) = h, rescales the backward branch to agree at the match
/// index, and returns the mismatch of the one-sided derivatives there
/// divided by u(match), together with the interior node count of the
/// stitched solution. Zero defect iff E is an eigenvalue of the discrete
/// problem.
DefectSample matching_defect(double energy, const ProblemSpec& spec, const RadialGrid& grid,
                             const ShootingConfig& cfg);

/// Locates the eigenvalue whose eigenfunction has `target_nodes` interior
/// nodes: scans the window, brackets the node-count jump, bisects to
/// bisection_rel_tol and polishes on the defect sign. Returns the
/// normalized solution; state label n = target_nodes + 1.
EigenSolution find_eigenvalue(const ProblemSpec& spec, const RadialGrid& grid,
                              const ShootingConfig& cfg, int target_nodes);

/// Like find_eigenvalue, but the target is the k-th state (k = 1, 2, ...)
/// above the bottom of the energy window rather than an absolute node
/// count. Coincides with find_eigenvalue(k-1) when no states lie below the
/// window; used for cutoff-sensitivity reruns where states may slip below.
EigenSolution find_window_state(const ProblemSpec& spec, const RadialGrid& grid,
                                const ShootingConfig& cfg, int k);

struct SpectrumEntry {
    int n = 0; ///< state label, n = nodes + 1
    std::optional<EigenSolution> solution;
    std::string failure; ///< empty on success
};

/// Up to n_max states with node counts 0 .. n_max-1, ascending in energy.
/// Missing states are gaps (empty solution), not errors.
std::vector<SpectrumEntry> scan_spectrum(const ProblemSpec& spec, const RadialGrid& grid,
                                         const ShootingConfig& cfg, int n_max);

/// Default mesh: D = 3 -> [1e-3, 60]; D = 4 -> [1e-3, 30]; D >= 5 ->
/// [0.8 * r0, 30] with r0 the zero crossing of U_eff (keeps the singular
/// core resolvable and the pocket free of negative-energy states). 20001
/// points throughout.
RadialGrid default_grid(const ProblemSpec& spec);

/// Default energy window: D = 3 -> (1.1 * min grid U_eff, -1e-6);
/// D = 4 -> (1e-6, 1e3); D >= 5 -> (1e-6, 0.999 * U_m).
ShootingConfig default_config(const ProblemSpec& spec, const RadialGrid& grid);

} // namespace hydrod
