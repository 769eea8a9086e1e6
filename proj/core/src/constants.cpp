#include "hydrod/constants.hpp"

#include <cmath>

namespace hydrod {

double gamma_half_integer(double x) {
    if (x <= 0.0)
        throw std::invalid_argument("gamma_half_integer: argument must be positive, got " +
                                    std::to_string(x));
    double twice = 2.0 * x;
    if (std::abs(twice - std::round(twice)) > 1e-12)
        throw std::invalid_argument("gamma_half_integer: argument must be a multiple of 1/2, got " +
                                    std::to_string(x));

    // Gamma(1/2) = sqrt(pi), Gamma(1) = 1, then Gamma(t+1) = t Gamma(t).
    double t = (std::lround(twice) % 2 == 0) ? 1.0 : 0.5;
    double g = (t == 0.5) ? std::sqrt(M_PI) : 1.0;
    while (t < x - 0.25) {
        g *= t;
        t += 1.0;
    }
    return g;
}

} // namespace hydrod
