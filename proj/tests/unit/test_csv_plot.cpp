#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <regex>
#include <string>

#include "pacman/csv.hpp"
#include "pacman/errors.hpp"
#include "pacman/svg_plot.hpp"

using namespace pacman;
namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("doubles round-trip through text") {
    for (double v : {0.0, 1.0 / 3.0, -2.5e-300, 1e300, std::numbers::pi, 0.1 + 0.2}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("csv round trip") {
    CsvTable t;
    t.header = {"k", "p"};
    t.rows = {{"1", "0.25"}, {"2", "0.75"}};
    const std::string text = to_csv(t);
    CHECK(text == "k,p\n1,0.25\n2,0.75\n");
    const auto back = parse_csv(text);
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
    CHECK(back.column("p") == 1);
    CHECK(back.column("q") == CsvTable::npos);
    CHECK_THROWS(parse_csv("a,b\n1\n"));
}

TEST_CASE("atomic write") {
    const auto path = std::filesystem::temp_directory_path() / "pacman_csv_test.csv";
    write_file_atomic(path, "a\n1\n");
    CHECK(read_file(path) == "a\n1\n");
    write_file_atomic(path, "a\n2\n");
    CHECK(read_file(path) == "a\n2\n");
    std::filesystem::remove(path);
}

TEST_CASE("rate plot for one alpha") {
    CsvTable t;
    t.header = {"alpha", "n", "sup_error", "mean_error", "region_min_radius"};
    t.rows = {{"3.1415926535897931", "32", "0.02", "0.001", "1.6"},
              {"3.1415926535897931", "64", "0.018", "0.0007", "1.9"},
              {"3.1415926535897931", "128", "0.009", "0.0004", "2.3"}};
    const std::string svg = render_plot(t, PlotKind::RateLogLog);
    CHECK(svg.rfind("<svg", 0) != std::string::npos);
    CHECK(count(svg, "class=\"series\"") == 1);
    CHECK(count(svg, "class=\"reference\"") == 1);
    CHECK(count(svg, "data-n=") == 3);
    CHECK(svg.find("data-slope=\"1\"") != std::string::npos);
}

TEST_CASE("mixed alphas get one series and legend entry each") {
    CsvTable t;
    t.header = {"alpha", "n", "sup_error"};
    for (const char* a : {"0", "1.5707963267948966", "3.1415926535897931"}) {
        for (int n : {32, 64, 128}) t.rows.push_back({a, std::to_string(n), format_double(0.5 / n)});
    }
    const std::string svg = render_plot(t, PlotKind::RateLogLog);
    CHECK(count(svg, "class=\"series\"") == 3);
    CHECK(count(svg, "class=\"reference\"") == 3);
    CHECK(count(svg, "class=\"legend-entry\"") == 3);
    for (const char* a : {">0<", ">1.5707963267948966<", ">3.1415926535897931<"}) CHECK(svg.find(a) != std::string::npos);
}

TEST_CASE("arc histogram heights") {
    CsvTable t;
    t.header = {"k", "measure"};
    const double p[] = {0.5, 0.25, 0.125, 0.125};
    for (int k = 0; k < 4; ++k) t.rows.push_back({std::to_string(k + 1), format_double(p[k])});
    const std::string svg = render_plot(t, PlotKind::ArcHistogram);
    CHECK(count(svg, "class=\"bar\"") == 4);
    const std::regex value("class=\"bar\" data-k=\"[0-9]+\" data-value=\"([^\"]+)\"");
    double total = 0.0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), value); it != std::sregex_iterator(); ++it) {
        total += std::stod((*it)[1].str());
    }
    CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("empty data is rejected") {
    CsvTable t;
    t.header = {"k", "p"};
    CHECK_THROWS_AS(render_plot(t, PlotKind::ArcHistogram), PlotError);
    CsvTable r;
    r.header = {"alpha", "n", "sup_error"};
    CHECK_THROWS_AS(render_plot(r, PlotKind::RateLogLog), PlotError);
}
