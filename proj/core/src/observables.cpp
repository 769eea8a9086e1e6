#include "hydrod/observables.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace hydrod {

namespace {

// p(r) = R^2 r^(D-1) on the grid.
std::vector<double> radial_density(const EigenSolution& s) {
    std::vector<double> p(s.radial_samples.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        double R = s.radial_samples[k];
        p[k] = R * R * std::pow(s.r_samples[k], s.spec.dimension - 1);
    }
    return p;
}

double trapezoid(const std::vector<double>& y, double h) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < y.size(); ++k)
        sum += 0.5 * (y[k] + y[k + 1]);
    return sum * h;
}

double norm_integral(const EigenSolution& s) {
    return trapezoid(radial_density(s), s.grid.spacing());
}

// Portable uniform double in [0, 1) from the raw 64-bit stream;
// std::uniform_real_distribution is not bit-reproducible across stdlibs.
double next_u01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

} // namespace

EigenSolution normalize(const EigenSolution& solution) {
    double norm = norm_integral(solution);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::runtime_error("normalize: degenerate solution (zero or non-finite norm)");
    double scale = 1.0 / std::sqrt(norm);

    // Fix the overall sign so outputs are deterministic.
    double peak = 0.0;
    for (double v : solution.u_samples)
        peak = std::max(peak, std::abs(v));
    for (double v : solution.u_samples) {
        if (std::abs(v) > 1e-3 * peak) {
            if (v < 0.0)
                scale = -scale;
            break;
        }
    }

    EigenSolution out = solution;
    for (double& v : out.u_samples)
        v *= scale;
    for (double& v : out.radial_samples)
        v *= scale;
    return out;
}

double mean_radius_quadrature(const EigenSolution& solution) {
    double norm = norm_integral(solution);
    if (std::abs(norm - 1.0) > 1e-3)
        throw std::logic_error("mean_radius_quadrature: solution is not normalized (norm = " +
                               std::to_string(norm) + ")");
    std::vector<double> p = radial_density(solution);
    for (std::size_t k = 0; k < p.size(); ++k)
        p[k] *= solution.r_samples[k];
    return trapezoid(p, solution.grid.spacing());
}

RadiusStats mean_radius_mc(const EigenSolution& solution, long n_samples, std::uint64_t seed) {
    if (n_samples < 1000)
        throw std::invalid_argument("mean_radius_mc: n_samples must be >= 1000");

    std::vector<double> p = radial_density(solution);
    double p_max = *std::max_element(p.begin(), p.end());
    if (!(p_max > 0.0))
        throw std::runtime_error("mean_radius_mc: degenerate density");

    double r_min = solution.grid.r_min;
    double span = solution.grid.r_max - r_min;
    double h = solution.grid.spacing();

    std::mt19937_64 rng(seed);
    long accepted = 0;
    double mean = 0.0, m2 = 0.0; // Welford
    for (long i = 0; i < n_samples; ++i) {
        double r = r_min + span * next_u01(rng);
        double x = (r - r_min) / h;
        auto k = static_cast<std::size_t>(x);
        if (k + 1 >= p.size())
            k = p.size() - 2;
        double frac = x - static_cast<double>(k);
        double density = p[k] + frac * (p[k + 1] - p[k]);
        if (next_u01(rng) * p_max < density) {
            ++accepted;
            double delta = r - mean;
            mean += delta / static_cast<double>(accepted);
            m2 += delta * (r - mean);
        }
    }
    if (accepted == 0)
        throw std::runtime_error("mean_radius_mc: no proposals accepted (degenerate density)");

    RadiusStats stats;
    stats.mean_quadrature = mean_radius_quadrature(solution);
    stats.mean_mc = mean;
    stats.mc_sigma =
        accepted >= 2 ? std::sqrt(m2 / static_cast<double>(accepted - 1)) /
                            std::sqrt(static_cast<double>(accepted))
                      : 0.0;
    stats.most_probable = most_probable_radius(solution).r;
    stats.n_samples = n_samples;
    stats.n_accepted = accepted;
    stats.seed = seed;
    return stats;
}

MostProbableRadius most_probable_radius(const EigenSolution& solution) {
    std::vector<double> p = radial_density(solution);
    std::size_t best = 0;
    for (std::size_t k = 1; k < p.size(); ++k)
        if (p[k] > p[best]) // ties keep the lower radius
            best = k;

    MostProbableRadius out;
    if (best == 0 || best + 1 == p.size()) {
        out.boundary_peak = true;
        out.r = solution.r_samples[best];
        return out;
    }
    double h = solution.grid.spacing();
    double denom = p[best - 1] - 2.0 * p[best] + p[best + 1];
    double shift = 0.0;
    if (denom < 0.0)
        shift = 0.5 * h * (p[best - 1] - p[best + 1]) / denom;
    out.r = solution.r_samples[best] + shift;
    return out;
}

} // namespace hydrod
