#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "pacman/errors.hpp"
#include "pacman/experiments.hpp"

using namespace pacman;
namespace {

constexpr double kPi = std::numbers::pi;

// x placed ln n above the lower ray, in the middle of arc k0 (or halfway
// between the inner edge of the last arc and the circle).
LatticePoint near_arc(const PacmanGeometry& g, int k0) {
    const double r = std::min((k0 - 0.5) * g.arc_width(), 0.5 * ((k0 - 1) * g.arc_width() + g.radius));
    const Complex t = g.tip() + Complex{r, std::log(static_cast<double>(g.n))};
    return {static_cast<int>(std::lround(t.real())), static_cast<int>(std::lround(t.imag()))};
}

}  // namespace

TEST_CASE("log-log fit on hand-computable data") {
    const std::vector<std::pair<double, double>> pts{{1, 2}, {2, 4}, {4, 8}};
    const auto fit = fit_loglog(pts);
    CHECK(std::abs(fit.slope - 1.0) < 1e-14);
    CHECK(std::abs(fit.intercept - std::log(2.0)) < 1e-14);
    CHECK(fit.r_squared == doctest::Approx(1.0));

    const std::vector<std::pair<double, double>> flat{{1, 3}, {2, 3}, {5, 3}};
    CHECK(fit_loglog(flat).slope == 0.0);
    CHECK(fit_loglog(flat).r_squared == 1.0);
}

TEST_CASE("synthetic power law recovers its exponent") {
    std::vector<std::pair<double, double>> pts;
    for (int n : {32, 64, 128, 256, 512}) pts.emplace_back(rate_scale(n), std::pow(rate_scale(n), 0.7));
    const auto fit = fit_loglog(pts);
    CHECK(std::abs(fit.slope - 0.7) < 1e-10);
    CHECK(std::abs(fit.intercept) < 1e-10);
}

TEST_CASE("fit preconditions") {
    const std::vector<std::pair<double, double>> two{{1, 1}, {2, 2}};
    CHECK_THROWS_AS(fit_loglog(two), FitError);
    const std::vector<std::pair<double, double>> neg{{1, 1}, {2, -2}, {3, 1}};
    CHECK_THROWS_AS(fit_loglog(neg), DomainError);
    const std::vector<std::pair<double, double>> same_scale{{2, 1}, {2, 2}, {2, 3}};
    CHECK_THROWS_AS(fit_loglog(same_scale), FitError);

    ExperimentConfig cfg;
    cfg.alphas = {kPi};
    cfg.ns = {8, 16};
    CHECK_THROWS_AS(cfg.validate(), FitError);
    cfg.ns = {8, 32, 16};
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.ns = {8, 16, 32};
    cfg.alphas = {4.0};
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("error field values and decay") {
    const auto e32 = error_field(build_geometry(kPi, 32));
    for (double v : e32.error.values()) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
    }
    CHECK(e32.sup_error > 0.0);
    CHECK(e32.mean_error <= e32.sup_error);
    CHECK(e32.region_size > 0);
    CHECK(e32.region_min_radius == doctest::Approx(std::pow(32.0 / std::pow(std::log(32.0), 2), 0.5)));
    const auto e64 = error_field(build_geometry(kPi, 64));
    CHECK(e64.sup_error < e32.sup_error);
}

TEST_CASE("small rate sweep") {
    ExperimentConfig cfg;
    cfg.alphas = {kPi / 2, kPi};
    cfg.ns = {8, 16, 32};
    const auto results = rate_sweep(cfg);
    REQUIRE(results.size() == 2);
    for (const auto& r : results) {
        CHECK(r.scales.size() == 3);
        CHECK(r.c_alpha == doctest::Approx(c_alpha(r.alpha)));
        CHECK(std::isfinite(r.fit.slope));
        for (const auto& s : r.scales) CHECK(s.sup_error > 0.0);
    }
}

TEST_CASE("bound shapes") {
    const auto g = build_geometry(0.0, 64);
    const double l = std::log(64.0);
    // c = 1/2: (k0 k)^{-1/2} / ((sqrt k - sqrt k0)^2 ln^{1/2} n)
    CHECK(arc_bound_shape(g, 2, 5) ==
          doctest::Approx(std::pow(10.0, -0.5) / (std::pow(std::sqrt(5.0) - std::sqrt(2.0), 2) * std::sqrt(l))));
    const auto h = build_geometry(kPi, 64);
    CHECK(expdiff_bound_scale(h, 3) == doctest::Approx(l * l / 64.0));
}

TEST_CASE("exit-radius log ratio shape across k0") {
    const auto g = build_geometry(kPi, 64);
    const auto d = build_lattice_domain(g);
    double lo = 1e300, hi = 0.0;
    for (int k0 : {2, 4, 8}) {
        const LatticePoint x = near_arc(g, k0);
        const auto r = expdiff_estimate(d, x, x.to_complex() + Complex{0, 1}, {50000, 3, 0});
        CHECK(r.k0 == k0);
        const double ratio = r.estimate / r.bound_scale;
        CHECK(ratio >= 0.01);
        CHECK(ratio <= 100.0);
        // radii in one bucket differ by at most ln^2 n over a radius of order n
        CHECK(r.estimate <= rate_scale(g.n));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 4.0);
}

TEST_CASE("standard error scales like one over root trials") {
    const auto g = build_geometry(kPi, 64);
    const auto d = build_lattice_domain(g);
    const LatticePoint x = near_arc(g, 2);
    const auto a = expdiff_estimate(d, x, x.to_complex(), {40000, 21, 0});
    const auto b = expdiff_estimate(d, x, x.to_complex(), {80000, 21, 0});
    CHECK(std::abs(a.standard_error / b.standard_error - std::sqrt(2.0)) <= 0.1 * std::sqrt(2.0));
}

TEST_CASE("exit-radius preconditions") {
    const auto g = build_geometry(kPi, 64);
    const auto d = build_lattice_domain(g);
    const LatticePoint x = near_arc(g, 2);
    CHECK_THROWS_AS(expdiff_estimate(d, {0, 0}, {0, 0}, {100, 0, 0}), DomainError);  // far from the boundary
    CHECK_THROWS_AS(expdiff_estimate(d, x, x.to_complex() + Complex{50, 0}, {100, 0, 0}), DomainError);
    CHECK_THROWS_AS(expdiff_estimate(d, x, Complex{0, -80}, {100, 0, 0}), DomainError);
}
