#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hydrod/grid.hpp"
#include "hydrod/problem.hpp"

namespace hydrod {

enum class Direction { forward, backward };

/// A Numerov step would divide by a (1 - h^2 f / 12) factor that is
/// numerically zero: the grid is too coarse for the potential at `index`.
struct StepFailure : std::runtime_error {
    std::size_t index;
    explicit StepFailure(std::size_t k)
        : std::runtime_error("numerov_propagate: step factor vanished at index " +
                             std::to_string(k) + " (grid too coarse for the potential)"),
          index(k) {}
};

/// f(r) = 2 (U_eff(r) - E), so that u'' = f u in atomic units.
/// f < 0 is classically allowed, f > 0 forbidden.
double local_f(double energy, double r, const ProblemSpec& spec);

/// Three-term Numerov recurrence
///   u_{k+1} (1 - h^2 f_{k+1}/12) = 2 u_k (1 + 5 h^2 f_k/12)
///                                  - u_{k-1} (1 - h^2 f_{k-1}/12)
/// applied across f_samples in the given direction. For `forward` the seeds
/// are u[0], u[1]; for `backward` they are u[N-1], u[N-2] and the returned
/// sequence is still in grid order. If |u| exceeds 1e250 the partial
/// solution is rescaled by 1e-250 (pure gauge).
std::vector<double> numerov_propagate(std::span<const double> f_samples, double h, double seed0,
                                      double seed1, Direction direction);

/// Strict sign changes between consecutive interior samples. Exact zeros are
/// attributed to the following sample so a touching zero is not counted
/// twice.
int count_nodes(std::span<const double> u_samples);

/// R_k = u_k / r_k^((D-1)/2).
std::vector<double> reconstruct_R(std::span<const double> u_samples, const RadialGrid& grid,
                                  int dimension);

} // namespace hydrod
