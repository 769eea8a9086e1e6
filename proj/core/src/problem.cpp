#include "hydrod/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hydrod/constants.hpp"

namespace hydrod {

ProblemSpec make_problem(int dimension, int angular_momentum, double charge_scale) {
    if (dimension < 3)
        throw std::invalid_argument("make_problem: dimension must be >= 3, got " +
                                    std::to_string(dimension));
    if (dimension > 30)
        throw std::invalid_argument("make_problem: dimension must be <= 30, got " +
                                    std::to_string(dimension));
    if (angular_momentum < 0)
        throw std::invalid_argument("make_problem: angular_momentum must be >= 0, got " +
                                    std::to_string(angular_momentum));
    if (!(charge_scale > 0.0))
        throw std::invalid_argument("make_problem: charge_scale must be > 0, got " +
                                    std::to_string(charge_scale));

    ProblemSpec spec;
    spec.dimension = dimension;
    spec.angular_momentum = angular_momentum;
    spec.charge_scale = charge_scale;
    spec.j_index = angular_momentum + (dimension - 3) / 2.0;
    spec.coupling = 2.0 * gamma_half_integer(dimension / 2.0) /
                    (std::pow(M_PI, (dimension - 2) / 2.0) * (dimension - 2)) *
                    charge_scale * charge_scale;
    return spec;
}

} // namespace hydrod
