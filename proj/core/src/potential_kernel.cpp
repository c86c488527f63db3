#include "pacman/potential_kernel.hpp"

#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "pacman/errors.hpp"

namespace pacman {

double potential_constant() { return (2.0 * kEulerGamma + 3.0 * std::numbers::ln2) / std::numbers::pi; }

void PotentialKernelConfig::validate() const {
    if (quadrature_points < 128) {
        throw DomainError("quadrature_points must be >= 128, got " + std::to_string(quadrature_points));
    }
    if (!(asymptotic_cutoff_radius >= 20.0)) {
        throw DomainError("asymptotic_cutoff_radius must be >= 20");
    }
}

PotentialKernelConfig PotentialKernelConfig::exact_everywhere() {
    PotentialKernelConfig cfg;
    cfg.asymptotic_cutoff_radius = std::numeric_limits<double>::infinity();
    return cfg;
}

PotentialKernel::PotentialKernel(PotentialKernelConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    const unsigned order = static_cast<unsigned>(cfg_.quadrature_points);
    // Gauss-Legendre on [-1, 1], mapped to (0, pi). Even orders keep every
    // node off the endpoints.
    const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(static_cast<int>(order));
    std::vector<double> abscissae;
    abscissae.reserve(order);
    for (double z : zeros) {
        abscissae.push_back(z);
        if (z != 0.0) abscissae.push_back(-z);
    }
    const double half = std::numbers::pi / 2.0;
    for (double z : abscissae) {
        const double dp = boost::math::legendre_p_prime(static_cast<int>(order), z);
        nodes_.push_back(half * (z + 1.0));
        weights_.push_back(half * 2.0 / ((1.0 - z * z) * dp * dp));
    }
}

// Integrating out theta_1 in closed form,
//   a(m, k) = (2/pi) \int_0^pi (1 - e^{-|m| t} cos(k theta)) / sinh t  dtheta,
// with cosh t = 2 - cos theta. The integrand is analytic on [0, pi], so
// Gauss-Legendre converges geometrically.
double PotentialKernel::exact(LatticePoint x) const {
    const int ax = std::abs(x.x);
    const int ay = std::abs(x.y);
    if (ax == 0 && ay == 0) return 0.0;
    const double m = std::max(ax, ay);
    const double k = std::min(ax, ay);

    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const double theta = nodes_[i];
        const double half_sin = std::sin(theta / 2.0);
        const double c_minus_1 = 2.0 * half_sin * half_sin;  // 1 - cos theta
        const double sinh_t = std::sqrt(c_minus_1 * (2.0 + c_minus_1));
        const double t = std::log1p(c_minus_1 + sinh_t);
        const double decay = std::exp(-m * t);
        const double s = std::sin(k * theta / 2.0);
        const double numerator = -std::expm1(-m * t) + decay * 2.0 * s * s;
        sum += weights_[i] * numerator / sinh_t;
    }
    return 2.0 / std::numbers::pi * sum;
}

double PotentialKernel::asymptotic(LatticePoint x) const {
    if (x.x == 0 && x.y == 0) throw DomainError("asymptotic potential kernel is singular at the origin");
    return std::log(std::sqrt(static_cast<double>(x.norm2()))) * 2.0 / std::numbers::pi + potential_constant();
}

double PotentialKernel::operator()(LatticePoint x) const {
    const double r = std::sqrt(static_cast<double>(x.norm2()));
    return r <= cfg_.asymptotic_cutoff_radius ? exact(x) : asymptotic(x);
}

namespace {
const PotentialKernel& default_kernel() {
    static const PotentialKernel kernel{};
    return kernel;
}
}  // namespace

double potential_exact(LatticePoint x) { return default_kernel().exact(x); }

double potential_asymptotic(LatticePoint x) { return default_kernel().asymptotic(x); }

double potential(LatticePoint x, const PotentialKernelConfig& cfg) {
    if (cfg.quadrature_points == default_kernel().config().quadrature_points &&
        cfg.asymptotic_cutoff_radius == default_kernel().config().asymptotic_cutoff_radius) {
        return default_kernel()(x);
    }
    return PotentialKernel{cfg}(x);
}

}  // namespace pacman
