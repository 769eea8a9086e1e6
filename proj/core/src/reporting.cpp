#include "hydrod/reporting.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hydrod/constants.hpp"
#include "hydrod/observables.hpp"
#include "hydrod/potential.hpp"
#include "hydrod/shooting.hpp"

namespace hydrod {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

RefKind parse_kind(const std::string& s) {
    if (s == "energy_eV")
        return RefKind::energy_ev;
    if (s == "mean_r_over_aB")
        return RefKind::mean_r_over_ab;
    if (s == "no_state")
        return RefKind::no_state;
    throw std::invalid_argument("reference: unknown kind '" + s + "'");
}

std::string kind_name(RefKind k) {
    switch (k) {
    case RefKind::energy_ev:
        return "energy_eV";
    case RefKind::mean_r_over_ab:
        return "mean_r_over_aB";
    case RefKind::no_state:
        return "no_state";
    }
    return "?";
}

std::string opt_str(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

// Commas and newlines in solver messages would break the CSV shape.
std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return s;
}

struct CellResult {
    std::optional<EigenSolution> solution;
    std::string error;
};

// variant: 0 = default r_min, 1 = halved, 2 = doubled.
class CellCache {
  public:
    const CellResult& get(int dimension, int l, int n, int variant) {
        auto key = std::make_tuple(dimension, l, n, variant);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        return cache_.emplace(key, solve(dimension, l, n, variant)).first->second;
    }

  private:
    static CellResult solve(int dimension, int l, int n, int variant) {
        CellResult out;
        try {
            ProblemSpec spec = make_problem(dimension, l);
            RadialGrid grid = default_grid(spec);
            if (variant == 1)
                grid = build_grid(0.5 * grid.r_min, grid.r_max, grid.n_points);
            else if (variant == 2)
                grid = build_grid(2.0 * grid.r_min, grid.r_max, grid.n_points);
            ShootingConfig cfg = default_config(spec, grid);
            out.solution = find_window_state(spec, grid, cfg, n);
        } catch (const std::exception& e) {
            out.error = e.what();
        }
        return out;
    }

    std::map<std::tuple<int, int, int, int>, CellResult> cache_;
};

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

std::vector<RefRow> load_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("reference: cannot open '" + path + "'");
    std::vector<RefRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (lineno == 1 || line.rfind("table,", 0) == 0)
            continue; // header
        auto f = split_csv(line);
        if (f.size() != 7)
            throw std::invalid_argument("reference: line " + std::to_string(lineno) +
                                        ": expected 7 fields, got " + std::to_string(f.size()));
        RefRow row;
        row.table = f[0];
        row.kind = parse_kind(f[1]);
        row.dimension = std::stoi(f[2]);
        row.angular_momentum = std::stoi(f[3]);
        row.n = std::stoi(f[4]);
        if (row.kind != RefKind::no_state)
            row.value = std::stod(f[5]);
        if (!f[6].empty())
            row.sigma = std::stod(f[6]);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::runtime_error("reference: no data rows in '" + path + "'");
    return rows;
}

ComparisonReport compare_reference(const std::vector<RefRow>& rows, long mc_samples,
                                   std::uint64_t seed) {
    CellCache cache;
    ComparisonReport report;
    report.rows.reserve(rows.size());

    auto cell_value = [&](const RefRow& ref, int variant) -> std::pair<std::optional<double>, std::string> {
        const CellResult& cell =
            cache.get(ref.dimension, ref.angular_momentum, ref.n, variant);
        if (!cell.solution)
            return {std::nullopt, cell.error};
        if (ref.kind == RefKind::energy_ev)
            return {hartree_to_ev(cell.solution->energy), ""};
        try {
            RadiusStats stats = mean_radius_mc(*cell.solution, mc_samples, seed);
            return {stats.mean_mc, ""};
        } catch (const std::exception& e) {
            return {std::nullopt, e.what()};
        }
    };

    for (const RefRow& ref : rows) {
        ComparisonRow row;
        row.ref = ref;

        if (ref.kind == RefKind::no_state) {
            const CellResult& cell =
                cache.get(ref.dimension, ref.angular_momentum, ref.n, 0);
            if (cell.solution) {
                row.computed = hartree_to_ev(cell.solution->energy);
                row.status = "unexpected-state";
            } else {
                row.status = "no-state";
                row.note = sanitize(cell.error);
            }
            report.rows.push_back(std::move(row));
            continue;
        }

        auto [value, err] = cell_value(ref, 0);
        row.computed = value;
        auto [half, err_h] = cell_value(ref, 1);
        row.computed_rmin_half = half;
        auto [twice, err_t] = cell_value(ref, 2);
        row.computed_rmin_twice = twice;

        if (!value) {
            row.status = "error";
            row.note = sanitize(err);
        } else {
            row.abs_dev = *value - ref.value;
            row.rel_dev = (*value - ref.value) / std::abs(ref.value);
            double r = std::abs(*row.rel_dev);
            row.status = r <= kStatusOkRelDev ? "ok" : r <= kStatusFlagRelDev ? "flag" : "dev";
        }
        report.rows.push_back(std::move(row));
    }

    // E1 / U_m for the l = 1 column, for the summary.
    std::set<int> l1_dims;
    for (const RefRow& ref : rows)
        if (ref.angular_momentum == 1 && ref.dimension >= 5)
            l1_dims.insert(ref.dimension);
    for (int d : l1_dims) {
        const CellResult& cell = cache.get(d, 1, 1, 0);
        if (cell.solution) {
            double u_m = barrier(make_problem(d, 1)).u_max;
            report.e1_over_um.emplace_back(d, cell.solution->energy / u_m);
        }
    }
    return report;
}

void write_report_csv(const ComparisonReport& report, std::ostream& out) {
    out << "table,kind,D,l,n,paper_value,paper_sigma,computed,abs_dev,rel_dev,"
           "computed_rmin_half,computed_rmin_twice,status,note\n";
    for (const ComparisonRow& r : report.rows) {
        out << r.ref.table << ',' << kind_name(r.ref.kind) << ',' << r.ref.dimension << ','
            << r.ref.angular_momentum << ',' << r.ref.n << ','
            << (r.ref.kind == RefKind::no_state ? std::string() : format_double(r.ref.value))
            << ',' << opt_str(r.ref.sigma) << ',' << opt_str(r.computed) << ','
            << opt_str(r.abs_dev) << ',' << opt_str(r.rel_dev) << ','
            << opt_str(r.computed_rmin_half) << ',' << opt_str(r.computed_rmin_twice) << ','
            << r.status << ',' << r.note << '\n';
    }
}

void write_report_summary(const ComparisonReport& report, std::ostream& out) {
    std::map<std::string, std::vector<const ComparisonRow*>> by_table;
    for (const ComparisonRow& r : report.rows)
        by_table[r.ref.table].push_back(&r);

    out << "comparison summary (" << report.rows.size() << " reference rows)\n";
    for (const auto& [table, rows] : by_table) {
        int n_ok = 0, n_flag = 0, n_dev = 0, n_other = 0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const ComparisonRow* r : rows) {
            if (r->status == "ok")
                ++n_ok;
            else if (r->status == "flag")
                ++n_flag;
            else if (r->status == "dev")
                ++n_dev;
            else
                ++n_other;
            if (r->rel_dev) {
                lo = std::min(lo, *r->rel_dev);
                hi = std::max(hi, *r->rel_dev);
            }
        }
        out << "  " << table << ": " << rows.size() << " rows, ok=" << n_ok
            << " flag=" << n_flag << " dev=" << n_dev;
        if (n_other > 0)
            out << " other=" << n_other;
        if (std::isfinite(lo))
            out << ", rel dev in [" << format_double(lo) << ", " << format_double(hi) << "]";
        out << '\n';
    }
    if (!report.e1_over_um.empty()) {
        out << "  E1/U_m (l=1): ";
        bool first = true;
        for (const auto& [d, ratio] : report.e1_over_um) {
            if (!first)
                out << ", ";
            out << "D=" << d << " " << format_double(ratio);
            first = false;
        }
        out << "  (source quotes 0.1%..0.6%; normalization there is unstated)\n";
    }
}

} // namespace hydrod
