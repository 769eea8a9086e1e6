#pragma once

#include <vector>

namespace hydrod {

/// Uniform radial mesh on [r_min, r_max], r_min > 0 (the potential is
/// singular at the origin; for D >= 5 the core is unboundedly attractive,
/// so the inner wall is a declared model parameter).
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    int n_points = 0;

    double spacing() const { return (r_max - r_min) / (n_points - 1); }
    double point(int k) const { return r_min + k * spacing(); }
    std::vector<double> points() const;
};

RadialGrid build_grid(double r_min, double r_max, int n_points);

} // namespace hydrod
