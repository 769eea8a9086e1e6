#include <sstream>

#include "doctest.h"
#include "hydrod/reporting.hpp"

using namespace hydrod;

namespace {

const RefRow* find_row(const std::vector<RefRow>& rows, const std::string& table, int d, int l,
                       int n) {
    for (const auto& r : rows)
        if (r.table == table && r.dimension == d && r.angular_momentum == l && r.n == n)
            return &r;
    return nullptr;
}

} // namespace

TEST_CASE("bundled reference tables load completely") {
    auto rows = load_reference(HYDROD_REFERENCE_CSV);
    // T1: 24, T2: 24, T3: 16, T4: 6, S4: 2
    CHECK(rows.size() == 72);

    auto* t1 = find_row(rows, "T1", 5, 0, 1);
    REQUIRE(t1 != nullptr);
    CHECK(t1->kind == RefKind::energy_ev);
    CHECK(t1->value == doctest::Approx(0.31));
    CHECK_FALSE(t1->sigma.has_value());

    auto* t2 = find_row(rows, "T2", 5, 1, 1);
    REQUIRE(t2 != nullptr);
    CHECK(t2->value == doctest::Approx(0.51));

    auto* t3 = find_row(rows, "T3", 6, 2, 1);
    REQUIRE(t3 != nullptr);
    CHECK(t3->value == doctest::Approx(0.976));

    auto* t4 = find_row(rows, "T4", 10, 1, 1);
    REQUIRE(t4 != nullptr);
    CHECK(t4->kind == RefKind::mean_r_over_ab);
    CHECK(t4->value == doctest::Approx(0.252));
    REQUIRE(t4->sigma.has_value());
    CHECK(*t4->sigma == doctest::Approx(0.003));

    auto* s4 = find_row(rows, "S4", 4, 1, 1);
    REQUIRE(s4 != nullptr);
    CHECK(s4->kind == RefKind::no_state);
}

TEST_CASE("format_double round-trips and is locale independent") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-13.605693) == "-13.605693");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(format_double(1e-6).find(',') == std::string::npos);
}

TEST_CASE("comparison report: one row per reference row, no drops") {
    // a small synthetic slice keeps this test fast
    std::vector<RefRow> rows;
    rows.push_back({"T2", RefKind::energy_ev, 5, 1, 1, 0.51, std::nullopt});
    rows.push_back({"S4", RefKind::no_state, 4, 0, 1, 0.0, std::nullopt});

    auto report = compare_reference(rows, 50000, 7);
    REQUIRE(report.rows.size() == 2);

    const auto& energy = report.rows[0];
    REQUIRE(energy.computed.has_value());
    CHECK(*energy.computed == doctest::Approx(0.5013).epsilon(0.02));
    CHECK(energy.abs_dev.has_value());
    CHECK(energy.rel_dev.has_value());
    CHECK(energy.computed_rmin_half.has_value());
    CHECK(energy.computed_rmin_twice.has_value());
    CHECK((energy.status == "ok" || energy.status == "flag" || energy.status == "dev"));

    const auto& missing = report.rows[1];
    CHECK_FALSE(missing.computed.has_value());
    CHECK(missing.status == "no-state");

    std::ostringstream csv;
    write_report_csv(report, csv);
    // header + one line per row
    int lines = 0;
    for (char c : csv.str())
        if (c == '\n')
            ++lines;
    CHECK(lines == 3);
    CHECK(csv.str().rfind("table,kind,D,l,n,", 0) == 0);

    std::ostringstream summary;
    write_report_summary(report, summary);
    CHECK(summary.str().find("T2") != std::string::npos);
}

TEST_CASE("reference loader rejects malformed files") {
    CHECK_THROWS_AS(load_reference("/nonexistent/ref.csv"), std::runtime_error);
}
