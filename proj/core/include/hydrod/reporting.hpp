#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hydrod {

enum class RefKind {
    energy_ev,      ///< bound/confined level, eV
    mean_r_over_ab, ///< mean radius in Bohr radii
    no_state        ///< the reference asserts no state exists here
};

/// One published reference value, tagged with its table of origin
/// ("T1".."T4", or "S4" for the D = 4 nonexistence claim).
struct RefRow {
    std::string table;
    RefKind kind = RefKind::energy_ev;
    int dimension = 0;
    int angular_momentum = 0;
    int n = 0;
    double value = 0.0; ///< meaningless for kind == no_state
    std::optional<double> sigma;
};

/// Loads the bundled reference CSV
/// (columns: table,kind,D,l,n,value,sigma; sigma may be empty).
std::vector<RefRow> load_reference(const std::string& path);

struct ComparisonRow {
    RefRow ref;
    std::optional<double> computed;           ///< default numerics
    std::optional<double> computed_rmin_half; ///< r_min halved
    std::optional<double> computed_rmin_twice;
    std::optional<double> abs_dev;
    std::optional<double> rel_dev;
    std::string status; ///< ok | flag | dev | no-state | unexpected-state | error
    std::string note;   ///< solver message when a cell failed
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    /// E1 / U_m for l = 1, D = 5..10 (dimensionless), for the summary.
    std::vector<std::pair<int, double>> e1_over_um;
};

/// Tolerance classes for the status column; deviations never fail the run.
inline constexpr double kStatusOkRelDev = 0.10;
inline constexpr double kStatusFlagRelDev = 0.50;

/// Runs every reference cell at default numerics plus the r_min sensitivity
/// pair (r_min/2, 2*r_min). Per-cell solver failures are recorded in the
/// row, not thrown.
ComparisonReport compare_reference(const std::vector<RefRow>& rows, long mc_samples,
                                   std::uint64_t seed);

void write_report_csv(const ComparisonReport& report, std::ostream& out);
void write_report_summary(const ComparisonReport& report, std::ostream& out);

/// Shared CSV float formatting: shortest representation that round-trips.
std::string format_double(double v);

} // namespace hydrod
