#include "hydrod/grid.hpp"

#include <stdexcept>
#include <string>

namespace hydrod {

std::vector<double> RadialGrid::points() const {
    std::vector<double> r(n_points);
    double h = spacing();
    for (int k = 0; k < n_points; ++k)
        r[k] = r_min + k * h;
    return r;
}

RadialGrid build_grid(double r_min, double r_max, int n_points) {
    if (!(r_min > 0.0))
        throw std::invalid_argument("build_grid: r_min must be > 0 (origin is singular), got " +
                                    std::to_string(r_min));
    if (!(r_max > r_min))
        throw std::invalid_argument("build_grid: r_max must exceed r_min, got [" +
                                    std::to_string(r_min) + ", " + std::to_string(r_max) + "]");
    if (n_points < 16)
        throw std::invalid_argument("build_grid: n_points must be >= 16, got " +
                                    std::to_string(n_points));
    return RadialGrid{r_min, r_max, n_points};
}

} // namespace hydrod
