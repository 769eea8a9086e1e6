#include "hydrod/potential.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hydrod {

double coulomb_energy(double r, const ProblemSpec& spec) {
    if (!(r > 0.0))
        throw std::invalid_argument("coulomb_energy: r must be > 0, got " + std::to_string(r));
    return -spec.coupling / std::pow(r, spec.dimension - 2);
}

double effective_potential(double r, const ProblemSpec& spec) {
    if (!(r > 0.0))
        throw std::invalid_argument("effective_potential: r must be > 0, got " +
                                    std::to_string(r));
    double j = spec.j_index;
    return coulomb_energy(r, spec) + j * (j + 1.0) / (2.0 * r * r);
}

BarrierInfo barrier(const ProblemSpec& spec) {
    BarrierInfo info;
    if (spec.dimension < 5 || !(spec.j_index > 0.0) || !(spec.coupling > 0.0))
        return info;
    double j = spec.j_index;
    info.exists = true;
    info.r_peak = std::pow((spec.dimension - 2) * spec.coupling / (j * (j + 1.0)),
                           1.0 / (spec.dimension - 4));
    info.u_max = effective_potential(info.r_peak, spec);
    return info;
}

double core_crossing_radius(const ProblemSpec& spec) {
    if (spec.dimension < 5)
        throw std::invalid_argument("core_crossing_radius: requires dimension >= 5, got " +
                                    std::to_string(spec.dimension));
    double j = spec.j_index;
    return std::pow(2.0 * spec.coupling / (j * (j + 1.0)), 1.0 / (spec.dimension - 4));
}

double net_inverse_square_coefficient(const ProblemSpec& spec) {
    if (spec.dimension != 4)
        throw std::invalid_argument(
            "net_inverse_square_coefficient: only meaningful at dimension 4, got " +
            std::to_string(spec.dimension));
    double j = spec.j_index;
    return j * (j + 1.0) / 2.0 - spec.coupling;
}

double ehrenfest_energy(int dimension, int principal_n) {
    if (dimension < 3)
        throw std::invalid_argument("ehrenfest_energy: dimension must be >= 3, got " +
                                    std::to_string(dimension));
    if (dimension == 4)
        throw std::invalid_argument(
            "ehrenfest_energy: dimension 4 is singular (exponent divides by 4 - D)");
    if (principal_n < 1)
        throw std::invalid_argument("ehrenfest_energy: principal_n must be >= 1, got " +
                                    std::to_string(principal_n));
    double d = dimension;
    double expo = -(2.0 * d - 4.0) / (4.0 - d);
    return (d - 4.0) / (2.0 * (d - 2.0)) * std::pow(double(principal_n), expo);
}

} // namespace hydrod
