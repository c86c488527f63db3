#include "pacman/green_continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pacman/errors.hpp"

namespace pacman {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Points this close to the tip (or to u = 0) are rejected.
constexpr double kSingularGuard = 1e-9;

double normalized_arg(Complex v) {
    double theta = std::atan2(v.imag(), v.real());
    if (theta < 0.0) theta += kTwoPi;
    return theta;
}

// atan(a) - atan(b) for a >= b, without cancellation when both are large
// and of the same sign.
double arctan_difference(double a, double b) {
    if (a == b) return 0.0;
    if (std::isinf(a) && std::isinf(b)) return kPi;
    if (std::isinf(a)) return b > 0.0 ? std::atan(1.0 / b) : kPi / 2.0 - std::atan(b);
    if (std::isinf(b)) return a < 0.0 ? -std::atan(1.0 / a) : std::atan(a) + kPi / 2.0;
    const double denom = 1.0 + a * b;
    if (denom > 0.0) return std::atan((a - b) / denom);
    if (denom < 0.0) return std::atan((a - b) / denom) + (a > 0.0 ? kPi : -kPi);
    return std::atan(a) - std::atan(b);
}

void require_interior(const PacmanGeometry& g, Complex z, const char* what) {
    if (!contains(g, z)) {
        throw DomainError(std::string(what) + " (" + std::to_string(z.real()) + "," + std::to_string(z.imag()) +
                          ") is not strictly inside the domain");
    }
}

}  // namespace

Complex map_to_halfdisk(const PacmanGeometry& g, Complex z) {
    const Complex v = z + g.z0.to_complex();
    const double r = std::abs(v);
    if (r < kSingularGuard) throw SingularityError("the conformal map is singular at the tip -z0");
    const double theta = normalized_arg(v);
    if (r > g.radius * (1.0 + 1e-12) || theta > g.opening() + 1e-12) {
        throw DomainError("point (" + std::to_string(z.real()) + "," + std::to_string(z.imag()) +
                          ") lies outside the closed domain");
    }
    return std::polar(std::pow(r / g.radius, g.c_alpha), g.c_alpha * theta);
}

Complex halfdisk_to_halfplane(Complex u) {
    if (std::abs(u) < kSingularGuard) throw DomainError("halfdisk_to_halfplane is undefined at u = 0");
    return -(u + 1.0 / u);
}

double green_halfplane(Complex a, Complex b) {
    if (!(a.imag() > 0.0) || !(b.imag() > 0.0)) throw DomainError("green_halfplane needs Im a > 0 and Im b > 0");
    if (a == b) throw SingularityError("green_halfplane is singular at a = b");
    return std::log(std::abs(a - std::conj(b))) - std::log(std::abs(a - b));
}

double green_halfdisk(Complex u, Complex v) {
    if (u == v) throw SingularityError("green_halfdisk is singular at u = v");
    const double num = std::abs((1.0 - u * std::conj(v)) * (u - std::conj(v)));
    const double den = std::abs((u - v) * (1.0 - u * v));
    return std::log(num) - std::log(den);
}

double green_pacman(const PacmanGeometry& g, Complex z, Complex w) {
    require_interior(g, z, "z");
    require_interior(g, w, "w");
    return green_halfplane(map_to_halfplane(g, z), map_to_halfplane(g, w));
}

double green_pacman_via_halfdisk(const PacmanGeometry& g, Complex z, Complex w) {
    require_interior(g, z, "z");
    require_interior(g, w, "w");
    return green_halfdisk(map_to_halfdisk(g, z), map_to_halfdisk(g, w));
}

double halfplane_interval_measure(Complex p, double lo, double hi) {
    if (!(p.imag() > 0.0)) throw DomainError("half-plane harmonic measure needs Im p > 0");
    if (hi <= lo) return 0.0;
    const double y = p.imag();
    return arctan_difference((hi - p.real()) / y, (lo - p.real()) / y) / kPi;
}

ArcMeasure bm_arc_measure(const PacmanGeometry& g, Complex x) {
    require_interior(g, x, "start point");
    const Complex p = map_to_halfplane(g, x);
    const int arcs = g.arc_count;
    const double width = g.arc_width();

    ArcMeasure m;
    m.probability.assign(static_cast<std::size_t>(arcs), 0.0);
    m.standard_error.assign(static_cast<std::size_t>(arcs), 0.0);

    // |u| = (r / 2n)^c on both rays. The ray arg = 0 lands on u in (0, 1) and
    // then on (-inf, -2); the ray arg = 2 pi - alpha lands on u in (-1, 0)
    // and then on (2, inf). The circle lands on [-2, 2].
    auto image_of_radius = [&](double r) { return std::pow(std::min(r, g.radius) / g.radius, g.c_alpha); };
    auto lower_ray = [](double s) { return s == 0.0 ? -kInf : -(s + 1.0 / s); };
    auto upper_ray = [](double s) { return s == 0.0 ? kInf : s + 1.0 / s; };

    for (int k = 1; k <= arcs; ++k) {
        const double r_lo = (k - 1) * width;
        const double r_hi = k == arcs ? g.radius : k * width;
        const double s_lo = image_of_radius(r_lo);
        const double s_hi = image_of_radius(r_hi);
        double mass = halfplane_interval_measure(p, lower_ray(s_lo), lower_ray(s_hi)) +
                      halfplane_interval_measure(p, upper_ray(s_hi), upper_ray(s_lo));
        if (k == arcs) mass += halfplane_interval_measure(p, -2.0, 2.0);
        m.probability[static_cast<std::size_t>(k - 1)] = mass;
    }
    return m;
}

Complex sample_bm_exit(const PacmanGeometry& g, Complex y, double uniform) {
    if (!(uniform > 0.0 && uniform < 1.0)) throw DomainError("uniform variate must lie in (0, 1)");
    require_interior(g, y, "start point");
    const Complex p = map_to_halfplane(g, y);
    const double t = p.real() + p.imag() * std::tan(kPi * (uniform - 0.5));

    double modulus = 1.0;  // |u|
    double angle = 0.0;    // arg u in [0, pi]
    if (std::abs(t) <= 2.0) {
        angle = std::acos(-t / 2.0);
    } else {
        // smaller root of s + 1/s = |t|
        modulus = 2.0 / (std::abs(t) + std::sqrt(t * t - 4.0));
        angle = t < 0.0 ? 0.0 : kPi;
    }
    const double r = g.radius * std::pow(modulus, 1.0 / g.c_alpha);
    return std::polar(r, angle / g.c_alpha) - g.z0.to_complex();
}

}  // namespace pacman
