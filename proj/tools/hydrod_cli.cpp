// hydrod: D-dimensional hydrogen spectra, wave functions and radius
// statistics from the command line.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hydrod/config.hpp"
#include "hydrod/constants.hpp"
#include "hydrod/observables.hpp"
#include "hydrod/potential.hpp"
#include "hydrod/reporting.hpp"
#include "hydrod/shooting.hpp"

#ifndef HYDROD_REFERENCE_CSV
#define HYDROD_REFERENCE_CSV "data/paper_reference.csv"
#endif

namespace {

using namespace hydrod;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitIo = 3;

constexpr long kDefaultMcSamples = 1000000;
constexpr std::uint64_t kDefaultSeed = 12345;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flag values; count() on the CLI11 option decides whether they apply.
struct CommonFlags {
    std::string config_path;
    double r_min = 0.0;
    double r_max = 0.0;
    int n_points = 0;
    std::uint64_t seed = 0;

    CLI::Option* opt_config = nullptr;
    CLI::Option* opt_rmin = nullptr;
    CLI::Option* opt_rmax = nullptr;
    CLI::Option* opt_points = nullptr;
    CLI::Option* opt_seed = nullptr;

    void attach(CLI::App* cmd) {
        opt_config = cmd->add_option("--config", config_path, "config file (key = value)");
        opt_rmin = cmd->add_option("--rmin", r_min, "inner grid radius, Bohr");
        opt_rmax = cmd->add_option("--rmax", r_max, "outer grid radius, Bohr");
        opt_points = cmd->add_option("--points", n_points, "number of grid points");
        opt_seed = cmd->add_option("--seed", seed, "Monte Carlo seed");
    }

    /// defaults < $HYDROD_CONFIG < --config file < flags
    RunConfig resolve() const {
        RunConfig cfg = env_default_config();
        if (opt_config->count() > 0)
            overlay_config(cfg, load_config(config_path));
        RunConfig flags;
        if (opt_rmin->count() > 0)
            flags.r_min = r_min;
        if (opt_rmax->count() > 0)
            flags.r_max = r_max;
        if (opt_points->count() > 0)
            flags.n_points = n_points;
        if (opt_seed->count() > 0)
            flags.seed = seed;
        overlay_config(cfg, flags);
        return cfg;
    }
};

struct Setup {
    ProblemSpec spec;
    RadialGrid grid;
    ShootingConfig shooting;
};

Setup make_setup(int dimension, int l, const RunConfig& run) {
    Setup s;
    s.spec = make_problem(dimension, l);
    RadialGrid g = default_grid(s.spec);
    s.grid = build_grid(run.r_min.value_or(g.r_min), run.r_max.value_or(g.r_max),
                        run.n_points.value_or(g.n_points));
    s.shooting = default_config(s.spec, s.grid);
    if (run.scan_points)
        s.shooting.scan_points = *run.scan_points;
    if (run.bisection_rel_tol)
        s.shooting.bisection_rel_tol = *run.bisection_rel_tol;
    return s;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open output file '" + path + "'");
    return out;
}

std::string fd(double v) {
    return format_double(v);
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
    int d = 3, l = 0, n = 1;
    bool compare = false;
    std::string reference = HYDROD_REFERENCE_CSV;
    CommonFlags common;
};

int run_solve(const SolveArgs& a) {
    Setup s = make_setup(a.d, a.l, a.common.resolve());
    EigenSolution sol = find_eigenvalue(s.spec, s.grid, s.shooting, a.n - 1);

    std::string header = "D,l,n,E_hartree,E_eV,nodes,defect,r_min,r_max,n_points";
    std::string row = std::to_string(a.d) + ',' + std::to_string(a.l) + ',' +
                      std::to_string(a.n) + ',' + fd(sol.energy) + ',' +
                      fd(hartree_to_ev(sol.energy)) + ',' + std::to_string(sol.node_count) + ',' +
                      fd(sol.defect_residual) + ',' + fd(s.grid.r_min) + ',' + fd(s.grid.r_max) +
                      ',' + std::to_string(s.grid.n_points);
    if (a.compare) {
        header += ",paper_table,paper_value_eV";
        std::string table, value;
        for (const RefRow& ref : load_reference(a.reference)) {
            if (ref.kind == RefKind::energy_ev && ref.dimension == a.d &&
                ref.angular_momentum == a.l && ref.n == a.n) {
                table = ref.table;
                value = fd(ref.value);
                break;
            }
        }
        row += ',' + table + ',' + value;
    }
    std::cout << header << '\n' << row << '\n';
    return kExitOk;
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumArgs {
    int d_min = 0, d_max = 0, n_max = 4;
    std::vector<int> l_list{0};
    std::string output;
    CommonFlags common;
};

int run_spectrum(const SpectrumArgs& a) {
    RunConfig run = a.common.resolve();
    std::ostringstream body;
    body << "D,l,n,E_hartree,E_eV,nodes,U_m_hartree,E_over_Um\n";
    std::vector<int> ls = a.l_list;
    std::sort(ls.begin(), ls.end());
    for (int d = a.d_min; d <= a.d_max; ++d) {
        for (int l : ls) {
            Setup s = make_setup(d, l, run);
            BarrierInfo b = barrier(s.spec);
            std::string um = b.exists ? fd(b.u_max) : std::string();
            for (const SpectrumEntry& e : scan_spectrum(s.spec, s.grid, s.shooting, a.n_max)) {
                body << d << ',' << l << ',' << e.n << ',';
                if (e.solution) {
                    double en = e.solution->energy;
                    body << fd(en) << ',' << fd(hartree_to_ev(en)) << ','
                         << e.solution->node_count << ',' << um << ','
                         << (b.exists ? fd(en / b.u_max) : std::string());
                } else {
                    body << ",,," << um << ',';
                }
                body << '\n';
            }
        }
    }
    if (a.output.empty()) {
        std::cout << body.str();
    } else {
        auto out = open_output(a.output);
        out << body.str();
        if (!out)
            throw IoError("write failed for '" + a.output + "'");
    }
    return kExitOk;
}

// ---- observables -----------------------------------------------------------

struct ObservablesArgs {
    int d = 3, l = 0, n = 1;
    long samples = 0;
    CLI::Option* opt_samples = nullptr;
    CommonFlags common;
};

int run_observables(const ObservablesArgs& a) {
    RunConfig run = a.common.resolve();
    long samples = a.opt_samples->count() > 0 ? a.samples
                                              : run.mc_samples.value_or(kDefaultMcSamples);
    std::uint64_t seed = run.seed.value_or(kDefaultSeed);
    Setup s = make_setup(a.d, a.l, run);
    EigenSolution sol = find_eigenvalue(s.spec, s.grid, s.shooting, a.n - 1);
    RadiusStats st = mean_radius_mc(sol, samples, seed);
    std::cout << "D,l,n,r_mean_quad,r_mean_mc,mc_sigma,r_most_probable,n_samples,seed\n"
              << a.d << ',' << a.l << ',' << a.n << ',' << fd(st.mean_quadrature) << ','
              << fd(st.mean_mc) << ',' << fd(st.mc_sigma) << ',' << fd(st.most_probable) << ','
              << st.n_samples << ',' << st.seed << '\n';
    return kExitOk;
}

// ---- plotdata --------------------------------------------------------------

struct PlotArgs {
    int figure = 0;
    std::string outdir = ".";
    CommonFlags common;
};

void write_fig1(const std::string& path) {
    auto out = open_output(path);
    out << "# r_over_aB";
    for (int d = 3; d <= 10; ++d)
        out << "\tU_eff_hartree_D" << d;
    out << '\n';
    const int n = 400;
    const double r_lo = 0.01, r_hi = 2.0;
    for (int i = 0; i < n; ++i) {
        double r = r_lo + (r_hi - r_lo) * i / (n - 1);
        out << fd(r);
        for (int d = 3; d <= 10; ++d)
            out << '\t' << fd(effective_potential(r, make_problem(d, 1)));
        out << '\n';
    }
}

void write_fig2(const std::string& path, const RunConfig& run) {
    auto out = open_output(path);
    out << "# D\tE1_eV\tE2_eV\tE3_eV\tE4_eV\n";
    for (int d = 5; d <= 10; ++d) {
        Setup s = make_setup(d, 1, run);
        out << d;
        for (const SpectrumEntry& e : scan_spectrum(s.spec, s.grid, s.shooting, 4))
            out << '\t' << (e.solution ? fd(hartree_to_ev(e.solution->energy)) : std::string());
        out << '\n';
    }
}

void write_fig_radial(const std::string& path, int l, const RunConfig& run) {
    auto out = open_output(path);
    out << "# r_over_aB";
    for (int n = 1; n <= 4; ++n)
        out << "\tR" << n << "_arb";
    out << '\n';
    Setup s = make_setup(6, l, run);
    auto entries = scan_spectrum(s.spec, s.grid, s.shooting, 4);
    int stride = std::max(1, (s.grid.n_points - 1) / 2000);
    for (int k = 0; k < s.grid.n_points; k += stride) {
        out << fd(s.grid.point(k));
        for (const SpectrumEntry& e : entries)
            out << '\t' << (e.solution ? fd(e.solution->radial_samples[k]) : std::string());
        out << '\n';
    }
}

void write_fig6(const std::string& path, const RunConfig& run) {
    auto out = open_output(path);
    out << "# D\tr_mean_over_aB\tsigma\n";
    long samples = run.mc_samples.value_or(kDefaultMcSamples);
    std::uint64_t seed = run.seed.value_or(kDefaultSeed);
    for (int d = 5; d <= 10; ++d) {
        Setup s = make_setup(d, 1, run);
        EigenSolution sol = find_eigenvalue(s.spec, s.grid, s.shooting, 0);
        RadiusStats st = mean_radius_mc(sol, samples, seed);
        out << d << '\t' << fd(st.mean_mc) << '\t' << fd(st.mc_sigma) << '\n';
    }
}

int run_plotdata(const PlotArgs& a) {
    RunConfig run = a.common.resolve();
    std::filesystem::path dir(a.outdir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + a.outdir + "'");
    std::string path = (dir / ("fig" + std::to_string(a.figure) + ".tsv")).string();
    switch (a.figure) {
    case 1:
        write_fig1(path);
        break;
    case 2:
        write_fig2(path, run);
        break;
    case 3:
        write_fig_radial(path, 0, run);
        break;
    case 4:
        write_fig_radial(path, 1, run);
        break;
    case 5:
        write_fig_radial(path, 3, run);
        break;
    case 6:
        write_fig6(path, run);
        break;
    default:
        throw CLI::ValidationError("--figure must be 1..6");
    }
    std::cout << path << '\n';
    return kExitOk;
}

// ---- compare-paper ---------------------------------------------------------

struct CompareArgs {
    std::string output = "comparison.csv";
    std::string reference = HYDROD_REFERENCE_CSV;
    CommonFlags common;
};

int run_compare(const CompareArgs& a) {
    RunConfig run = a.common.resolve();
    auto rows = load_reference(a.reference);
    ComparisonReport report = compare_reference(rows, run.mc_samples.value_or(kDefaultMcSamples),
                                                run.seed.value_or(kDefaultSeed));
    auto out = open_output(a.output);
    write_report_csv(report, out);
    if (!out)
        throw IoError("write failed for '" + a.output + "'");
    write_report_summary(report, std::cout);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"D-dimensional hydrogen: Numerov spectra, wave functions, radius statistics"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve one state, print a CSV row");
    solve->add_option("--d", solve_args.d, "space dimension (3..30)")->required();
    solve->add_option("--l", solve_args.l, "angular momentum");
    solve->add_option("--n", solve_args.n, "state label (nodes + 1)");
    solve->add_flag("--compare", solve_args.compare, "append the bundled reference value");
    solve->add_option("--reference", solve_args.reference, "reference CSV path");
    solve_args.common.attach(solve);

    SpectrumArgs spec_args;
    auto* spectrum = app.add_subcommand("spectrum", "scan spectra over D and l, emit CSV");
    spectrum->add_option("--dmin", spec_args.d_min, "lowest dimension")->required();
    spectrum->add_option("--dmax", spec_args.d_max, "highest dimension")->required();
    spectrum->add_option("--l", spec_args.l_list, "angular momenta (repeatable)");
    spectrum->add_option("--nmax", spec_args.n_max, "states per (D, l)");
    spectrum->add_option("--output", spec_args.output, "output CSV path (default stdout)");
    spec_args.common.attach(spectrum);

    ObservablesArgs obs_args;
    auto* obs = app.add_subcommand("observables", "radius statistics for one state");
    obs->add_option("--d", obs_args.d, "space dimension (3..30)")->required();
    obs->add_option("--l", obs_args.l, "angular momentum");
    obs->add_option("--n", obs_args.n, "state label (nodes + 1)");
    obs_args.opt_samples = obs->add_option("--samples", obs_args.samples, "Monte Carlo proposals");
    obs_args.common.attach(obs);

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plotdata", "emit TSV data for figures 1..6");
    plot->add_option("--figure", plot_args.figure, "figure id (1..6)")->required();
    plot->add_option("--outdir", plot_args.outdir, "output directory");
    plot_args.common.attach(plot);

    CompareArgs cmp_args;
    auto* cmp = app.add_subcommand("compare-paper", "deviation report against bundled tables");
    cmp->add_option("--output", cmp_args.output, "report CSV path");
    cmp->add_option("--reference", cmp_args.reference, "reference CSV path");
    cmp_args.common.attach(cmp);

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return run_solve(solve_args);
        if (spectrum->parsed())
            return run_spectrum(spec_args);
        if (obs->parsed())
            return run_observables(obs_args);
        if (plot->parsed())
            return run_plotdata(plot_args);
        if (cmp->parsed())
            return run_compare(cmp_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        // normalize CLI11's exit codes: 0 for --help, 1 for any usage error
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const hydrod::StateNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotFound;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
