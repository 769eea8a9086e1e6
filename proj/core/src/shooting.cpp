#include "hydrod/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "hydrod/numerov.hpp"
#include "hydrod/observables.hpp"
#include "hydrod/potential.hpp"

namespace hydrod {

namespace {

constexpr double kMatchFloor = 1e-280;

std::vector<double> f_on_grid(double energy, const ProblemSpec& spec, const RadialGrid& grid) {
    std::vector<double> f(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k)
        f[k] = local_f(energy, grid.point(k), spec);
    return f;
}

int auto_match_index(const std::vector<double>& f) {
    int n = static_cast<int>(f.size());
    // Outermost classical turning point: last sign change of f.
    for (int k = n - 1; k >= 1; --k)
        if ((f[k] > 0.0) != (f[k - 1] > 0.0))
            return std::clamp(k, 2, n - 3);
    return n / 2;
}

struct Stitched {
    std::vector<double> fwd; // full grid, forward propagation
    std::vector<double> bwd; // grid indices [m-1 .. n-1]
    int match = 0;
    double scale = 0.0; // backward branch multiplier
    bool valid = false;  // false: u(match) underflowed, defect is meaningless
};

Stitched propagate_both(double energy, const ProblemSpec& spec, const RadialGrid& grid,
                        const ShootingConfig& cfg) {
    std::vector<double> f = f_on_grid(energy, spec, grid);
    int n = grid.n_points;
    double h = grid.spacing();

    int base;
    if (cfg.match_fraction > 0.0 && cfg.match_fraction < 1.0)
        base = std::clamp(static_cast<int>(std::lround(cfg.match_fraction * (n - 1))), 2, n - 3);
    else
        base = auto_match_index(f);

    // Inner seeds. D = 3 has a regular origin, so the forward branch is
    // started on the Frobenius series of the regular solution
    // u = sum_k c_k r^(l+1+k) (through k = 3, keeping the seed error at the
    // same O(h^4) order as the propagator); this removes the spurious
    // hard-wall shift of the eigenvalues that plain u(r_min) = 0 would
    // introduce. For D >= 4 the core is singular or same-power and the
    // inner cutoff is a declared model parameter: Dirichlet u = 0 applies.
    double s0 = 0.0, s1 = h;
    if (spec.dimension == 3) {
        double l = spec.j_index;
        double c = spec.coupling;
        double c0 = 1.0;
        double c1 = -2.0 * c * c0 / (2.0 * l + 2.0);
        double c2 = (-2.0 * c * c1 - 2.0 * energy * c0) / (2.0 * (2.0 * l + 3.0));
        double c3 = (-2.0 * c * c2 - 2.0 * energy * c1) / (3.0 * (2.0 * l + 4.0));
        auto series = [&](double r) {
            return std::pow(r, l + 1.0) * (c0 + r * (c1 + r * (c2 + r * c3)));
        };
        s0 = series(grid.r_min);
        s1 = series(grid.r_min + h);
    }

    std::span<const double> fs(f);
    std::vector<double> fwd = numerov_propagate(fs, h, s0, s1, Direction::forward);

    // A near-zero u(match) makes the defect singular; retry nearby indices.
    for (int shift : {0, 1, -1, 2, -2, 3, -3, 5, -5, 8, -8}) {
        int m = base + shift;
        if (m < 2 || m > n - 3)
            continue;
        Stitched st;
        st.match = m;
        st.bwd = numerov_propagate(fs.subspan(m - 1), h, 0.0, h, Direction::backward);
        double uf = fwd[m];
        double ub = st.bwd[1]; // grid index m
        if (std::abs(uf) < kMatchFloor || std::abs(ub) < kMatchFloor)
            continue;
        st.scale = uf / ub;
        st.valid = true;
        st.fwd = std::move(fwd);
        return st;
    }

    // Deep in a classically forbidden region the rescaled forward solution
    // underflows at the match point. Far from any eigenvalue by definition;
    // report an infinite defect but keep the (still meaningful) node count.
    Stitched st;
    st.match = base;
    st.fwd = std::move(fwd);
    return st;
}

DefectSample defect_at(double energy, const ProblemSpec& spec, const RadialGrid& grid,
                       const ShootingConfig& cfg) {
    Stitched st = propagate_both(energy, spec, grid, cfg);
    DefectSample out;
    if (st.valid) {
        int m = st.match;
        double h = grid.spacing();
        double d_fwd = st.fwd[m + 1] - st.fwd[m - 1];
        double d_bwd = st.scale * (st.bwd[2] - st.bwd[0]);
        out.defect = (d_fwd - d_bwd) / (2.0 * h * st.fwd[m]);
    } else {
        out.defect = std::numeric_limits<double>::infinity();
    }
    // Sturm oscillation count of the one-sided solution: equals the number
    // of eigenvalues below E, so it is monotone in E and safe to bisect on.
    out.nodes = count_nodes(st.fwd);
    return out;
}

struct ScanSample {
    double energy;
    DefectSample d;
};

std::vector<ScanSample> scan_window(const ProblemSpec& spec, const RadialGrid& grid,
                                    const ShootingConfig& cfg) {
    int n = std::max(cfg.scan_points, 2);
    std::vector<ScanSample> scan(n);
    for (int i = 0; i < n; ++i) {
        double e = cfg.energy_lo + (cfg.energy_hi - cfg.energy_lo) * i / (n - 1);
        scan[i] = {e, defect_at(e, spec, grid, cfg)};
    }
    return scan;
}

// Purely repulsive potentials (D = 4: net positive 1/r^2, no barrier, no
// attractive region) admit no localized states; anything a Dirichlet box
// would produce there is a wall artifact that vanishes as r_max grows.
void refuse_if_repulsive(const ProblemSpec& spec, const RadialGrid& grid) {
    if (barrier(spec).exists)
        return;
    double u_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid.n_points; ++k)
        u_min = std::min(u_min, effective_potential(grid.point(k), spec));
    if (u_min > 0.0) {
        std::string msg = "find_eigenvalue: effective potential is everywhere repulsive "
                          "(min U_eff = " +
                          std::to_string(u_min) + " Ha > 0); no localized states exist";
        if (spec.dimension == 4)
            msg += " (D = 4 net 1/r^2 coefficient = " +
                   std::to_string(net_inverse_square_coefficient(spec)) + " > 0)";
        throw StateNotFound(msg, 0, 0);
    }
}

EigenSolution assemble(double energy, const ProblemSpec& spec, const RadialGrid& grid,
                       const ShootingConfig& cfg, double defect_residual) {
    Stitched st = propagate_both(energy, spec, grid, cfg);
    if (!st.valid)
        throw std::runtime_error("find_eigenvalue: converged energy has a degenerate match point");
    EigenSolution sol;
    sol.energy = energy;
    sol.spec = spec;
    sol.grid = grid;
    sol.r_samples = grid.points();
    sol.u_samples.resize(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k)
        sol.u_samples[k] = k <= st.match ? st.fwd[k] : st.scale * st.bwd[k - (st.match - 1)];
    sol.node_count = count_nodes(sol.u_samples);
    sol.defect_residual = defect_residual;
    sol.radial_samples = reconstruct_R(sol.u_samples, grid, spec.dimension);
    return normalize(sol);
}

EigenSolution refine_in_bracket(const ProblemSpec& spec, const RadialGrid& grid,
                                const ShootingConfig& cfg, int target, double e_lo,
                                DefectSample d_lo, double e_hi, DefectSample d_hi) {
    // Phase 1: bisect on the node count (monotone in E) down to the jump.
    double tol = cfg.bisection_rel_tol;
    double best_e = e_lo;
    double best_defect = std::numeric_limits<double>::infinity();
    auto consider = [&](double e, const DefectSample& d) {
        if (std::abs(d.defect) < best_defect) {
            best_defect = std::abs(d.defect);
            best_e = e;
        }
    };
    consider(e_lo, d_lo);
    consider(e_hi, d_hi);
    for (int it = 0; it < cfg.max_bisections; ++it) {
        if (e_hi - e_lo <= tol * std::max({std::abs(e_lo), std::abs(e_hi), 1e-30}))
            break;
        double mid = 0.5 * (e_lo + e_hi);
        if (mid <= e_lo || mid >= e_hi)
            break; // bracket is a single representable interval
        DefectSample d = defect_at(mid, spec, grid, cfg);
        consider(mid, d);
        if (d.nodes <= target) {
            e_lo = mid;
            d_lo = d;
        } else {
            e_hi = mid;
            d_hi = d;
        }
    }

    // Phase 2: the grid node count registers a new node only once it has
    // moved one step into the interior, so the jump sits slightly above the
    // discrete eigenvalue. Locate the defect zero at or below the jump.
    double za = e_lo, zb = e_hi;
    double za_defect = d_lo.defect;
    bool bracketed = std::isfinite(d_lo.defect) && std::isfinite(d_hi.defect) &&
                     std::signbit(d_lo.defect) != std::signbit(d_hi.defect);
    if (!bracketed && std::isfinite(d_lo.defect)) {
        zb = e_lo;
        double step = std::max(e_hi - e_lo, 1e-14 * std::abs(e_lo));
        for (int k = 0; k < 60; ++k) {
            double e = zb - step;
            step *= 2.0;
            DefectSample d = defect_at(e, spec, grid, cfg);
            if (d.nodes < target)
                break; // crossed the previous eigenvalue: give up on a bracket
            consider(e, d);
            if (std::isfinite(d.defect) && std::signbit(d.defect) != std::signbit(za_defect)) {
                za = e;
                za_defect = d.defect;
                bracketed = true;
                break;
            }
            zb = e;
        }
    }
    if (bracketed) {
        for (int it = 0; it < cfg.max_bisections; ++it) {
            double mid = 0.5 * (za + zb);
            if (mid <= za || mid >= zb)
                break;
            DefectSample d = defect_at(mid, spec, grid, cfg);
            consider(mid, d);
            if (best_defect <= 10.0 * tol)
                break;
            if (std::isfinite(d.defect) && std::signbit(d.defect) == std::signbit(za_defect))
                za = mid;
            else
                zb = mid;
        }
    }

    EigenSolution sol = assemble(best_e, spec, grid, cfg, best_defect);
    if (sol.node_count != target) {
        // Converged onto the jump; the side with the target count carries
        // the intended state.
        EigenSolution lo_side = assemble(e_lo, spec, grid, cfg, std::abs(d_lo.defect));
        if (lo_side.node_count == target)
            sol = lo_side;
    }
    return sol;
}

EigenSolution locate_target(const ProblemSpec& spec, const RadialGrid& grid,
                            const ShootingConfig& cfg, const std::vector<ScanSample>& scan,
                            int target) {
    int seen_lo = scan.front().d.nodes;
    int seen_hi = scan.front().d.nodes;
    for (const auto& s : scan) {
        seen_lo = std::min(seen_lo, s.d.nodes);
        seen_hi = std::max(seen_hi, s.d.nodes);
    }
    for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
        if (scan[i].d.nodes <= target && scan[i + 1].d.nodes > target)
            return refine_in_bracket(spec, grid, cfg, target, scan[i].energy, scan[i].d,
                                     scan[i + 1].energy, scan[i + 1].d);
    }
    throw StateNotFound("find_eigenvalue: no defect bracket with node count " +
                            std::to_string(target) + " in window [" +
                            std::to_string(cfg.energy_lo) + ", " + std::to_string(cfg.energy_hi) +
                            "] Ha (node counts seen: " + std::to_string(seen_lo) + " .. " +
                            std::to_string(seen_hi) + ")",
                        seen_lo, seen_hi);
}

void check_config(const ShootingConfig& cfg) {
    if (!(cfg.energy_lo < cfg.energy_hi))
        throw std::invalid_argument("ShootingConfig: energy window must satisfy lo < hi");
    if (!(cfg.bisection_rel_tol > 0.0))
        throw std::invalid_argument("ShootingConfig: bisection_rel_tol must be > 0");
}

} // namespace

DefectSample matching_defect(double energy, const ProblemSpec& spec, const RadialGrid& grid,
                             const ShootingConfig& cfg) {
    return defect_at(energy, spec, grid, cfg);
}

EigenSolution find_eigenvalue(const ProblemSpec& spec, const RadialGrid& grid,
                              const ShootingConfig& cfg, int target_nodes) {
    if (target_nodes < 0)
        throw std::invalid_argument("find_eigenvalue: target_nodes must be >= 0");
    check_config(cfg);
    refuse_if_repulsive(spec, grid);
    auto scan = scan_window(spec, grid, cfg);
    return locate_target(spec, grid, cfg, scan, target_nodes);
}

EigenSolution find_window_state(const ProblemSpec& spec, const RadialGrid& grid,
                                const ShootingConfig& cfg, int k) {
    if (k < 1)
        throw std::invalid_argument("find_window_state: k must be >= 1");
    check_config(cfg);
    refuse_if_repulsive(spec, grid);
    auto scan = scan_window(spec, grid, cfg);
    int base = scan.front().d.nodes;
    return locate_target(spec, grid, cfg, scan, base + k - 1);
}

std::vector<SpectrumEntry> scan_spectrum(const ProblemSpec& spec, const RadialGrid& grid,
                                         const ShootingConfig& cfg, int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("scan_spectrum: n_max must be >= 1");
    check_config(cfg);

    std::vector<SpectrumEntry> out;
    out.reserve(n_max);
    try {
        refuse_if_repulsive(spec, grid);
    } catch (const StateNotFound& e) {
        for (int t = 0; t < n_max; ++t)
            out.push_back({t + 1, std::nullopt, e.what()});
        return out;
    }

    auto scan = scan_window(spec, grid, cfg);
    for (int t = 0; t < n_max; ++t) {
        SpectrumEntry entry;
        entry.n = t + 1;
        try {
            entry.solution = locate_target(spec, grid, cfg, scan, t);
        } catch (const StateNotFound& e) {
            entry.failure = e.what();
        }
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.solution && b.solution)
            return a.solution->energy < b.solution->energy;
        return a.n < b.n;
    });
    return out;
}

RadialGrid default_grid(const ProblemSpec& spec) {
    constexpr int kPoints = 20001;
    if (spec.dimension == 3)
        return build_grid(1e-3, 60.0, kPoints);
    if (spec.dimension == 4)
        return build_grid(1e-3, 30.0, kPoints);
    return build_grid(0.8 * core_crossing_radius(spec), 30.0, kPoints);
}

ShootingConfig default_config(const ProblemSpec& spec, const RadialGrid& grid) {
    ShootingConfig cfg;
    if (spec.dimension == 3) {
        double u_min = std::numeric_limits<double>::infinity();
        for (int k = 0; k < grid.n_points; ++k)
            u_min = std::min(u_min, effective_potential(grid.point(k), spec));
        cfg.energy_lo = 1.1 * u_min;
        cfg.energy_hi = -1e-6;
    } else if (spec.dimension == 4) {
        cfg.energy_lo = 1e-6;
        cfg.energy_hi = 1e3;
    } else {
        cfg.energy_lo = 1e-6;
        cfg.energy_hi = 0.999 * barrier(spec).u_max;
    }
    return cfg;
}

} // namespace hydrod
