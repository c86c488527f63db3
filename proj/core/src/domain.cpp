#include "pacman/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pacman/errors.hpp"

namespace pacman {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Angular slack for the open wedge; exact-edge lattice points are excluded.
constexpr double kEdgeSlack = 1e-12;
constexpr std::int32_t kOutside = std::numeric_limits<std::int32_t>::min();

double normalized_arg(Complex v) {
    double theta = std::atan2(v.imag(), v.real());
    if (theta < 0.0) theta += kTwoPi;
    return theta;
}

}  // namespace

double PacmanGeometry::arc_width() const {
    const double l = std::log(static_cast<double>(n));
    return l * l;
}

double PacmanGeometry::opening() const { return kTwoPi - alpha; }

double c_alpha(double alpha) { return std::numbers::pi / (kTwoPi - alpha); }

int arc_count_for(int n) {
    const double l = std::log(static_cast<double>(n));
    return static_cast<int>(std::ceil(2.0 * n / (l * l)));
}

PacmanGeometry build_geometry(double alpha, int n) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > std::numbers::pi) {
        throw DomainError("alpha must lie in [0, pi], got " + std::to_string(alpha));
    }
    if (n < kMinScale) {
        throw DomainError("n must be at least " + std::to_string(kMinScale) + ", got " + std::to_string(n));
    }

    PacmanGeometry g;
    g.alpha = alpha;
    g.n = n;
    g.c_alpha = c_alpha(alpha);
    g.arc_count = arc_count_for(n);
    g.radius = 2.0 * n;

    const Complex target = std::polar(static_cast<double>(n), std::numbers::pi - alpha / 2.0);
    const int x0 = static_cast<int>(std::floor(target.real()));
    const int y0 = static_cast<int>(std::floor(target.imag()));
    double best = std::numeric_limits<double>::infinity();
    // Candidates visited in increasing (x, y) so the first strict minimum
    // wins ties lexicographically.
    for (int dx = 0; dx <= 1; ++dx) {
        for (int dy = 0; dy <= 1; ++dy) {
            const LatticePoint p{x0 + dx, y0 + dy};
            const double d = std::norm(p.to_complex() - target);
            if (d < best) {
                best = d;
                g.z0 = p;
            }
        }
    }
    return g;
}

bool contains(const PacmanGeometry& g, Complex z) {
    const Complex v = z + g.z0.to_complex();
    const double r2 = std::norm(v);
    if (!(r2 > 0.0) || !(r2 < g.radius * g.radius)) return false;
    const double theta = normalized_arg(v);
    return theta > kEdgeSlack && theta < g.opening() - kEdgeSlack;
}

int arc_index(const PacmanGeometry& g, Complex z) {
    const double r = std::abs(z + g.z0.to_complex());
    const double bucket = std::floor(r / g.arc_width());
    if (bucket >= g.arc_count - 1) return g.arc_count;
    return static_cast<int>(bucket) + 1;
}

BoundaryProjection project_to_boundary(const PacmanGeometry& g, Complex z) {
    const Complex shift = g.z0.to_complex();
    const Complex v = z + shift;
    const double big_r = g.radius;

    Complex best = 0.0;
    double best_d = std::abs(v);
    auto consider = [&](Complex p) {
        const double d = std::abs(v - p);
        if (d < best_d) {
            best_d = d;
            best = p;
        }
    };

    for (const Complex dir : {Complex{1.0, 0.0}, std::polar(1.0, g.opening())}) {
        const double t = std::clamp((v * std::conj(dir)).real(), 0.0, big_r);
        consider(t * dir);
    }
    if (std::abs(v) > 0.0 && normalized_arg(v) <= g.opening()) {
        consider(big_r * v / std::abs(v));
    }

    const Complex point = best - shift;
    const int arc = std::abs(best) >= big_r * (1.0 - 1e-12) ? g.arc_count : arc_index(g, point);
    return {point, best_d, arc};
}

LatticeDomain LatticeDomain::from_geometry(const PacmanGeometry& g) {
    const int r = 2 * g.n;
    const int cx = -g.z0.x;
    const int cy = -g.z0.y;
    std::vector<LatticePoint> interior;
    interior.reserve(static_cast<std::size_t>(std::numbers::pi * r * r));
    for (int y = cy - r; y <= cy + r; ++y) {
        for (int x = cx - r; x <= cx + r; ++x) {
            const LatticePoint p{x, y};
            if (contains(g, p)) interior.push_back(p);
        }
    }
    LatticeDomain d;
    d.geometry_ = g;
    d.arc_count_ = g.arc_count;
    d.finalize(std::move(interior));
    return d;
}

LatticeDomain LatticeDomain::from_sites(std::span<const LatticePoint> interior) {
    LatticeDomain d;
    d.finalize(std::vector<LatticePoint>(interior.begin(), interior.end()));
    return d;
}

void LatticeDomain::finalize(std::vector<LatticePoint> interior) {
    std::sort(interior.begin(), interior.end());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
    if (interior.empty()) throw DomainError("lattice domain has no interior sites");
    if (interior.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw DomainError("lattice domain too large for 32-bit site indices");
    }
    interior_ = std::move(interior);

    int xmin = interior_.front().x, xmax = xmin;
    int ymin = interior_.front().y, ymax = interior_.back().y;
    for (const auto& p : interior_) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
    }
    grid_min_ = {xmin - 1, ymin - 1};
    grid_width_ = xmax - xmin + 3;
    grid_height_ = ymax - ymin + 3;
    grid_.assign(static_cast<std::size_t>(grid_width_) * grid_height_, kOutside);

    auto cell = [this](LatticePoint p) -> std::int32_t& {
        return grid_[static_cast<std::size_t>(p.y - grid_min_.y) * grid_width_ + (p.x - grid_min_.x)];
    };

    for (std::size_t i = 0; i < interior_.size(); ++i) cell(interior_[i]) = static_cast<std::int32_t>(i);

    boundary_.clear();
    for (const auto& p : interior_) {
        for (const auto& step : kLatticeSteps) {
            const LatticePoint q = p + step;
            if (cell(q) == kOutside) boundary_.push_back(q);
        }
    }
    std::sort(boundary_.begin(), boundary_.end());
    boundary_.erase(std::unique(boundary_.begin(), boundary_.end()), boundary_.end());
    for (std::size_t b = 0; b < boundary_.size(); ++b) cell(boundary_[b]) = ~static_cast<std::int32_t>(b);

    boundary_arcs_.resize(boundary_.size());
    for (std::size_t b = 0; b < boundary_.size(); ++b) {
        boundary_arcs_[b] = geometry_ ? arc_index(*geometry_, boundary_[b]) : 1;
    }

    neighbors_.resize(interior_.size());
    for (std::size_t i = 0; i < interior_.size(); ++i) {
        for (std::size_t s = 0; s < kLatticeSteps.size(); ++s) {
            neighbors_[i][s] = cell(interior_[i] + kLatticeSteps[s]);
        }
    }
}

std::int32_t LatticeDomain::lookup(LatticePoint p) const {
    const int gx = p.x - grid_min_.x;
    const int gy = p.y - grid_min_.y;
    if (gx < 0 || gy < 0 || gx >= grid_width_ || gy >= grid_height_) return kOutside;
    return grid_[static_cast<std::size_t>(gy) * grid_width_ + gx];
}

std::optional<std::size_t> LatticeDomain::interior_index(LatticePoint p) const {
    const std::int32_t code = lookup(p);
    if (code < 0) return std::nullopt;
    return static_cast<std::size_t>(code);
}

std::optional<std::size_t> LatticeDomain::boundary_index(LatticePoint p) const {
    const std::int32_t code = lookup(p);
    if (code >= 0 || code == kOutside) return std::nullopt;
    return boundary_of(code);
}

}  // namespace pacman
