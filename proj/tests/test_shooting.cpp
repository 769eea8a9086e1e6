#include <cmath>

#include "doctest.h"
#include "hydrod/constants.hpp"
#include "hydrod/potential.hpp"
#include "hydrod/shooting.hpp"

using namespace hydrod;

TEST_CASE("hydrogen ground and first excited state") {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 60.0, 20001);
    auto cfg = default_config(spec, grid);

    auto s1 = find_eigenvalue(spec, grid, cfg, 0);
    CHECK(s1.energy == doctest::Approx(-0.5).epsilon(1e-6));
    CHECK(s1.node_count == 0);
    CHECK(std::abs(s1.defect_residual) <= 10.0 * cfg.bisection_rel_tol);

    auto s2 = find_eigenvalue(spec, grid, cfg, 1);
    CHECK(s2.energy == doctest::Approx(-0.125).epsilon(1e-6));
    CHECK(s2.node_count == 1);
    CHECK(std::abs(s2.defect_residual) <= 10.0 * cfg.bisection_rel_tol);
}

TEST_CASE("defect is small at an eigenvalue and changes sign across it") {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 60.0, 20000);
    auto cfg = default_config(spec, grid);

    auto sol = find_eigenvalue(spec, grid, cfg, 0);
    auto at = matching_defect(sol.energy, spec, grid, cfg);
    CHECK(std::abs(at.defect) < 1e-6);

    auto below = matching_defect(sol.energy - 1e-5, spec, grid, cfg);
    auto above = matching_defect(sol.energy + 1e-5, spec, grid, cfg);
    CHECK(std::signbit(below.defect) != std::signbit(above.defect));
}

TEST_CASE("mirror insensitivity: match fraction 0.3 vs 0.7") {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 30.0, 8001);
    auto cfg = default_config(spec, grid);

    cfg.match_fraction = 0.3;
    auto a = find_eigenvalue(spec, grid, cfg, 0);
    cfg.match_fraction = 0.7;
    auto b = find_eigenvalue(spec, grid, cfg, 0);
    CHECK(std::abs(a.energy - b.energy) <=
          10.0 * cfg.bisection_rel_tol * std::abs(a.energy) + 1e-12);
}

TEST_CASE("window-relative state lookup") {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 60.0, 20001);
    ShootingConfig cfg;
    cfg.energy_lo = -0.6; // no eigenvalues below
    cfg.energy_hi = -0.01;

    auto k1 = find_window_state(spec, grid, cfg, 1);
    CHECK(k1.energy == doctest::Approx(-0.5).epsilon(1e-6));
    auto k2 = find_window_state(spec, grid, cfg, 2);
    CHECK(k2.energy == doctest::Approx(-0.125).epsilon(1e-6));
}

TEST_CASE("state not found carries the node-count range seen") {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 60.0, 20001);
    ShootingConfig cfg;
    cfg.energy_lo = -2.0; // window below the ground state: no eigenvalues
    cfg.energy_hi = -1.0;
    CHECK_THROWS_AS(find_eigenvalue(spec, grid, cfg, 0), StateNotFound);
    try {
        find_eigenvalue(spec, grid, cfg, 0);
    } catch (const StateNotFound& e) {
        CHECK(e.min_nodes_seen == 0);
        CHECK(e.max_nodes_seen == 0);
    }
}

TEST_CASE("D=4 is refused as purely repulsive") {
    for (int l : {0, 1}) {
        auto spec = make_problem(4, l);
        auto grid = default_grid(spec);
        auto cfg = default_config(spec, grid);
        CHECK_THROWS_AS(find_eigenvalue(spec, grid, cfg, 0), StateNotFound);
    }
}

TEST_CASE("spectrum scan: ascending energies, node counts 0..n-1") {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 60.0, 20001);
    auto cfg = default_config(spec, grid);
    auto entries = scan_spectrum(spec, grid, cfg, 3);
    REQUIRE(entries.size() == 3);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(entries[i].solution.has_value());
        CHECK(entries[i].solution->node_count == i);
        CHECK(entries[i].n == i + 1);
        if (i > 0)
            CHECK(entries[i].solution->energy > entries[i - 1].solution->energy);
    }
    // -0.5, -0.125, -0.0555...
    CHECK(entries[2].solution->energy == doctest::Approx(-1.0 / 18.0).epsilon(1e-6));
}

TEST_CASE("D=5 l=1 confined ground state") {
    auto spec = make_problem(5, 1);
    auto grid = default_grid(spec);
    auto cfg = default_config(spec, grid);
    auto sol = find_eigenvalue(spec, grid, cfg, 0);
    // independent diagonalization of the same operator gives 0.5013 eV
    CHECK(hartree_to_ev(sol.energy) == doctest::Approx(0.5013).epsilon(4e-3));
    CHECK(sol.energy > 0.0);
    CHECK(sol.energy < barrier(spec).u_max);
    CHECK(std::abs(sol.defect_residual) <= 10.0 * cfg.bisection_rel_tol);
}

TEST_CASE("default grid and window") {
    auto g3 = default_grid(make_problem(3, 0));
    CHECK(g3.r_min == doctest::Approx(1e-3));
    CHECK(g3.r_max == doctest::Approx(60.0));
    CHECK(g3.n_points == 20001);

    auto s5 = make_problem(5, 1);
    auto g5 = default_grid(s5);
    CHECK(g5.r_min == doctest::Approx(0.8 * core_crossing_radius(s5)).epsilon(1e-12));
    CHECK(g5.r_max == doctest::Approx(30.0));

    auto c5 = default_config(s5, g5);
    CHECK(c5.energy_lo == doctest::Approx(1e-6));
    CHECK(c5.energy_hi == doctest::Approx(0.999 * barrier(s5).u_max).epsilon(1e-12));

    auto c3 = default_config(make_problem(3, 0), g3);
    CHECK(c3.energy_lo < -1000.0); // 1.1 * U_eff(r_min) = 1.1 * (-1000)
    CHECK(c3.energy_hi < 0.0);
}

TEST_CASE("config validation") {
    auto spec = make_problem(3, 0);
    auto grid = build_grid(1e-3, 60.0, 20001);
    ShootingConfig bad;
    bad.energy_lo = -1.0;
    bad.energy_hi = -2.0;
    CHECK_THROWS_AS(find_eigenvalue(spec, grid, bad, 0), std::invalid_argument);
    CHECK_THROWS_AS(scan_spectrum(spec, grid, bad, 2), std::invalid_argument);
    ShootingConfig cfg = default_config(spec, grid);
    CHECK_THROWS_AS(find_eigenvalue(spec, grid, cfg, -1), std::invalid_argument);
    CHECK_THROWS_AS(find_window_state(spec, grid, cfg, 0), std::invalid_argument);
    CHECK_THROWS_AS(scan_spectrum(spec, grid, cfg, 0), std::invalid_argument);
}
