#include "hydrod/numerov.hpp"

#include <cmath>

#include "hydrod/potential.hpp"

namespace hydrod {

double local_f(double energy, double r, const ProblemSpec& spec) {
    return 2.0 * (effective_potential(r, spec) - energy);
}

std::vector<double> numerov_propagate(std::span<const double> f_samples, double h, double seed0,
                                      double seed1, Direction direction) {
    std::size_t n = f_samples.size();
    if (n < 3)
        throw std::invalid_argument("numerov_propagate: need at least 3 samples");
    if (!(h > 0.0))
        throw std::invalid_argument("numerov_propagate: spacing must be > 0");
    if (!std::isfinite(seed0) || !std::isfinite(seed1))
        throw std::invalid_argument("numerov_propagate: seeds must be finite");

    std::vector<double> u(n);
    double h2_12 = h * h / 12.0;
    auto w = [&](std::size_t k) { return 1.0 - h2_12 * f_samples[k]; };

    bool fwd = direction == Direction::forward;
    // Index in propagation order: i-th sample visited is grid index `at(i)`.
    auto at = [&](std::size_t i) { return fwd ? i : n - 1 - i; };

    u[at(0)] = seed0;
    u[at(1)] = seed1;
    for (std::size_t i = 2; i < n; ++i) {
        std::size_t k = at(i), k1 = at(i - 1), k2 = at(i - 2);
        double denom = w(k);
        if (std::abs(denom) < 1e-300)
            throw StepFailure(k);
        double next = (2.0 * u[k1] * (1.0 + 5.0 * h2_12 * f_samples[k1]) - u[k2] * w(k2)) / denom;
        if (std::abs(next) > 1e250) {
            for (std::size_t j = 0; j < i; ++j)
                u[at(j)] *= 1e-250;
            next *= 1e-250;
        }
        u[k] = next;
    }
    return u;
}

int count_nodes(std::span<const double> u_samples) {
    if (u_samples.size() < 3)
        throw std::invalid_argument("count_nodes: need at least 3 samples");
    int nodes = 0;
    int last_sign = 0;
    for (std::size_t k = 1; k + 1 < u_samples.size(); ++k) {
        double v = u_samples[k];
        if (v == 0.0)
            continue; // attributed to the following nonzero sample
        int s = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign)
            ++nodes;
        last_sign = s;
    }
    return nodes;
}

std::vector<double> reconstruct_R(std::span<const double> u_samples, const RadialGrid& grid,
                                  int dimension) {
    std::vector<double> R(u_samples.size());
    double expo = (dimension - 1) / 2.0;
    for (std::size_t k = 0; k < u_samples.size(); ++k)
        R[k] = u_samples[k] / std::pow(grid.point(static_cast<int>(k)), expo);
    return R;
}

} // namespace hydrod
