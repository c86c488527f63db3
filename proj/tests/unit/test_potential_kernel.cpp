#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pacman/errors.hpp"
#include "pacman/potential_kernel.hpp"

using namespace pacman;
namespace {

constexpr double kPi = std::numbers::pi;

// a(n, n) = (4 / pi) sum_{j=1..n} 1 / (2j - 1).
double diagonal(int n) {
    double s = 0.0;
    for (int j = 1; j <= n; ++j) s += 1.0 / (2.0 * j - 1.0);
    return 4.0 / kPi * s;
}

}  // namespace

TEST_CASE("small values") {
    CHECK(potential_exact({0, 0}) == 0.0);
    CHECK(std::abs(potential_exact({1, 0}) - 1.0) < 1e-12);
    CHECK(std::abs(potential_exact({0, -1}) - 1.0) < 1e-12);
    CHECK(std::abs(potential_exact({2, 0}) - (4.0 - 8.0 / kPi)) < 1e-12);
}

TEST_CASE("diagonal closed form") {
    for (int n = 1; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(std::abs(potential_exact({n, n}) - diagonal(n)) < 1e-11);
        CHECK(std::abs(potential_exact({-n, n}) - diagonal(n)) < 1e-11);
    }
}

TEST_CASE("constant k0") {
    const double k0 = (2.0 * 0.5772156649015329 + 3.0 * std::log(2.0)) / kPi;
    CHECK(std::abs(potential_constant() - k0) < 1e-15);
    CHECK(std::abs(potential_constant() - 1.029374) < 1e-6);
}

TEST_CASE("asymptotic form") {
    CHECK(potential_asymptotic({1, 0}) == doctest::Approx(potential_constant()).epsilon(1e-15));
    // (2/pi) ln 100 + k0 = 3.961116
    CHECK(std::abs(potential_asymptotic({100, 0}) - 3.961116) < 1e-6);
    CHECK_THROWS_AS(potential_asymptotic({0, 0}), DomainError);
    CHECK(std::abs(potential_exact({10, 0}) - 2.4951) < 1e-2);
}

TEST_CASE("discrete harmonicity away from the origin") {
    for (int x = -12; x <= 12; ++x) {
        for (int y = -12; y <= 12; ++y) {
            const double avg = 0.25 * (potential_exact({x + 1, y}) + potential_exact({x - 1, y}) +
                                       potential_exact({x, y + 1}) + potential_exact({x, y - 1}));
            const double expected = potential_exact({x, y}) + (x == 0 && y == 0 ? 1.0 : 0.0);
            CHECK(std::abs(avg - expected) < 1e-12);
        }
    }
}

TEST_CASE("lattice symmetries") {
    for (int x = -20; x <= 20; ++x) {
        for (int y = 0; y <= 20; ++y) {
            if (x * x + y * y > 400) continue;
            const double a = potential_exact({x, y});
            const LatticePoint images[] = {{-x, y}, {x, -y}, {-x, -y}, {y, x}, {-y, x}, {y, -x}, {-y, -x}};
            for (auto p : images) CHECK(potential_exact(p) == a);
        }
    }
}

TEST_CASE("remainder decays like |x|^-2") {
    for (int x = 10; x <= 64; x += 6) {
        for (int y : {0, x / 3, x / 2}) {
            const LatticePoint p{x, y};
            const double r2 = static_cast<double>(p.norm2());
            CHECK(std::abs(potential_exact(p) - potential_asymptotic(p)) * r2 <= 1.0);
        }
    }
}

TEST_CASE("cutoff switch is continuous to within the remainder") {
    const PotentialKernelConfig cfg{};
    const double c = cfg.asymptotic_cutoff_radius;
    const double below = potential({static_cast<int>(c) - 1, 0}, cfg);
    const double above = potential({static_cast<int>(c) + 1, 0}, cfg);
    CHECK(std::abs(above - below) <= 2.0 / kPi * std::log((c + 1) / (c - 1)) + 2e-3);
    CHECK(potential({0, 0}, cfg) == 0.0);
    CHECK(potential({-7, 3}, cfg) == potential({7, -3}, cfg));
    CHECK(potential({80, 0}, cfg) == potential_asymptotic({80, 0}));
}

TEST_CASE("quadrature order has converged") {
    const PotentialKernel coarse({256, 50});
    const PotentialKernel fine({1024, 50});
    for (LatticePoint p : {LatticePoint{1, 0}, {3, 2}, {17, 5}, {40, 40}}) {
        CHECK(std::abs(coarse.exact(p) - fine.exact(p)) < 1e-12);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(PotentialKernel({64, 50}), DomainError);
    CHECK_THROWS_AS(PotentialKernel({512, 10}), DomainError);
    CHECK(std::isinf(PotentialKernelConfig::exact_everywhere().asymptotic_cutoff_radius));
}
