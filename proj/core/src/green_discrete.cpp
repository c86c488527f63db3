#include "pacman/green_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "pacman/errors.hpp"

namespace pacman {
namespace {

using Vec = std::vector<double>;

// y = (I - P) x over interior sites; boundary neighbours contribute zero.
void apply_operator(const LatticeDomain& d, const Vec& x, Vec& y) {
    const auto table = d.neighbor_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        double s = 0.0;
        for (const std::int32_t code : table[i]) {
            if (!LatticeDomain::is_boundary_code(code)) s += x[static_cast<std::size_t>(code)];
        }
        y[i] = x[i] - 0.25 * s;
    }
}

double residual_norm(const LatticeDomain& d, const Vec& x, const Vec& rhs) {
    Vec ax(x.size());
    apply_operator(d, x, ax);
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(rhs[i] - ax[i]));
    return m;
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Returns false on breakdown (loss of positive curvature), leaving x at the
// best iterate so far.
bool conjugate_gradient(const LatticeDomain& d, const Vec& rhs, Vec& x, const SolverConfig& cfg,
                        SolveStats& stats) {
    const std::size_t n = rhs.size();
    Vec r(n), p(n), ap(n);
    const double target = cfg.residual_tolerance;

    auto restart = [&] {
        apply_operator(d, x, ap);
        for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - ap[i];
        p = r;
    };
    restart();
    double rr = dot(r, r);

    while (stats.iterations < cfg.max_iterations) {
        apply_operator(d, p, ap);
        const double pap = dot(p, ap);
        if (!(pap > 0.0) || !std::isfinite(pap)) return false;
        const double step = rr / pap;
        double rmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += step * p[i];
            r[i] -= step * ap[i];
            rmax = std::max(rmax, std::abs(r[i]));
        }
        ++stats.iterations;

        // The recursive residual drifts from the true one; confirm before
        // accepting and restart from the current iterate if they disagree.
        if (rmax <= 0.5 * target) {
            stats.residual = residual_norm(d, x, rhs);
            if (stats.residual <= target) return true;
            restart();
            rr = dot(r, r);
            continue;
        }
        const double rr_next = dot(r, r);
        const double beta = rr_next / rr;
        rr = rr_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
    stats.residual = residual_norm(d, x, rhs);
    return stats.residual <= target;
}

bool gauss_seidel(const LatticeDomain& d, const Vec& rhs, Vec& x, const SolverConfig& cfg, SolveStats& stats) {
    const auto table = d.neighbor_table();
    constexpr long kCheckEvery = 16;
    while (stats.iterations < cfg.max_iterations) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            double s = 0.0;
            for (const std::int32_t code : table[i]) {
                if (!LatticeDomain::is_boundary_code(code)) s += x[static_cast<std::size_t>(code)];
            }
            x[i] = rhs[i] + 0.25 * s;
        }
        ++stats.iterations;
        if (stats.iterations % kCheckEvery == 0 || stats.iterations == cfg.max_iterations) {
            stats.residual = residual_norm(d, x, rhs);
            if (stats.residual <= cfg.residual_tolerance) return true;
        }
    }
    return false;
}

Vec solve(const LatticeDomain& d, const Vec& rhs, const SolverConfig& cfg, SolveStats& stats) {
    cfg.validate();
    Vec x(rhs.size(), 0.0);
    stats = {};
    stats.method = cfg.method;
    bool ok = false;
    if (cfg.method == SolverMethod::ConjugateGradient) {
        ok = conjugate_gradient(d, rhs, x, cfg, stats);
        if (!ok && stats.iterations < cfg.max_iterations) {
            stats.method = SolverMethod::GaussSeidel;
            ok = gauss_seidel(d, rhs, x, cfg, stats);
        }
    } else {
        ok = gauss_seidel(d, rhs, x, cfg, stats);
    }
    if (!ok) {
        throw ConvergenceError("solver did not reach residual " + std::to_string(cfg.residual_tolerance) +
                                   " within " + std::to_string(cfg.max_iterations) + " iterations (residual " +
                                   std::to_string(stats.residual) + ")",
                               stats.residual, stats.iterations);
    }
    return x;
}

std::size_t require_interior(const LatticeDomain& d, LatticePoint w) {
    const auto idx = d.interior_index(w);
    if (!idx) {
        throw DomainError("point (" + std::to_string(w.x) + "," + std::to_string(w.y) + ") is not an interior site");
    }
    return *idx;
}

Vec dirichlet_rhs(const LatticeDomain& d, std::span<const double> h) {
    if (h.size() != d.boundary_size()) {
        throw DomainError("boundary data has " + std::to_string(h.size()) + " values, domain has " +
                          std::to_string(d.boundary_size()) + " boundary sites");
    }
    for (double v : h) {
        if (!std::isfinite(v)) throw DomainError("boundary data must be finite");
    }
    const auto table = d.neighbor_table();
    Vec rhs(table.size(), 0.0);
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (const std::int32_t code : table[i]) {
            if (LatticeDomain::is_boundary_code(code)) rhs[i] += 0.25 * h[LatticeDomain::boundary_of(code)];
        }
    }
    return rhs;
}

}  // namespace

void SolverConfig::validate() const {
    if (!(residual_tolerance > 0.0) || residual_tolerance > 1e-6) {
        throw DomainError("residual_tolerance must lie in (0, 1e-6]");
    }
    if (max_iterations < 1000) throw DomainError("max_iterations must be >= 1000");
}

ScalarField::ScalarField(const LatticeDomain& domain, std::vector<double> values, std::vector<double> boundary_values)
    : domain_(&domain), values_(std::move(values)), boundary_values_(std::move(boundary_values)) {
    if (values_.size() != domain.interior_size()) throw DomainError("field size does not match interior size");
    if (!boundary_values_.empty() && boundary_values_.size() != domain.boundary_size()) {
        throw DomainError("boundary value count does not match boundary size");
    }
}

double ScalarField::at(LatticePoint p) const {
    if (auto i = domain_->interior_index(p)) return values_[*i];
    if (auto b = domain_->boundary_index(p)) return boundary_values_.empty() ? 0.0 : boundary_values_[*b];
    throw DomainError("point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is outside the lattice domain");
}

ScalarField green_solve(const LatticeDomain& d, LatticePoint w, const SolverConfig& cfg) {
    const std::size_t wi = require_interior(d, w);
    Vec rhs(d.interior_size(), 0.0);
    rhs[wi] = 1.0;
    SolveStats stats;
    Vec x = solve(d, rhs, cfg, stats);
    ScalarField f(d, std::move(x));
    f.stats = stats;
    return f;
}

ScalarField dirichlet_solve(const LatticeDomain& d, std::span<const double> h, const SolverConfig& cfg) {
    const Vec rhs = dirichlet_rhs(d, h);
    SolveStats stats;
    Vec x = solve(d, rhs, cfg, stats);
    ScalarField f(d, std::move(x), Vec(h.begin(), h.end()));
    f.stats = stats;
    return f;
}

ScalarField green_via_potential(const LatticeDomain& d, LatticePoint w, const SolverConfig& cfg) {
    static const PotentialKernel exact{PotentialKernelConfig::exact_everywhere()};
    return green_via_potential(d, w, cfg, exact);
}

ScalarField green_via_potential(const LatticeDomain& d, LatticePoint w, const SolverConfig& cfg,
                                const PotentialKernel& kernel) {
    require_interior(d, w);
    // a(x) depends only on the sorted pair (|x1|, |x2|).
    std::unordered_map<long long, double> memo;
    auto a = [&](LatticePoint x) {
        const long long lo = std::min(std::abs(x.x), std::abs(x.y));
        const long long hi = std::max(std::abs(x.x), std::abs(x.y));
        const long long key = (hi << 32) | lo;
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        return memo.emplace(key, kernel(x)).first->second;
    };

    const auto boundary = d.boundary();
    Vec h(boundary.size());
    for (std::size_t b = 0; b < boundary.size(); ++b) h[b] = a(boundary[b] - w);
    ScalarField harmonic = dirichlet_solve(d, h, cfg);

    const auto interior = d.interior();
    Vec g(interior.size());
    for (std::size_t i = 0; i < interior.size(); ++i) g[i] = harmonic[i] - a(interior[i] - w);
    ScalarField f(d, std::move(g));
    f.stats = harmonic.stats;
    return f;
}

double green_residual(const ScalarField& f, LatticePoint w) {
    const LatticeDomain& d = f.domain();
    Vec rhs(d.interior_size(), 0.0);
    rhs[require_interior(d, w)] = 1.0;
    return residual_norm(d, Vec(f.values().begin(), f.values().end()), rhs);
}

double dirichlet_residual(const ScalarField& f, std::span<const double> h) {
    const LatticeDomain& d = f.domain();
    return residual_norm(d, Vec(f.values().begin(), f.values().end()), dirichlet_rhs(d, h));
}

std::vector<double> discrete_arc_measure(const LatticeDomain& d, LatticePoint x, const SolverConfig& cfg) {
    const std::size_t xi = require_interior(d, x);
    const auto arcs = d.boundary_arcs();
    std::vector<double> measure(static_cast<std::size_t>(d.arc_count()), 0.0);
    Vec h(arcs.size());
    for (int k = 1; k <= d.arc_count(); ++k) {
        bool any = false;
        for (std::size_t b = 0; b < arcs.size(); ++b) {
            h[b] = arcs[b] == k ? 1.0 : 0.0;
            any = any || arcs[b] == k;
        }
        if (!any) continue;
        measure[static_cast<std::size_t>(k - 1)] = dirichlet_solve(d, h, cfg)[xi];
    }
    return measure;
}

std::vector<double> exit_distribution(const LatticeDomain& d, LatticePoint x, const SolverConfig& cfg) {
    // G(x, .) = G(., x) by symmetry of (I - P).
    const ScalarField g = green_solve(d, x, cfg);
    std::vector<double> p(d.boundary_size(), 0.0);
    const auto table = d.neighbor_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (const std::int32_t code : table[i]) {
            if (LatticeDomain::is_boundary_code(code)) p[LatticeDomain::boundary_of(code)] += 0.25 * g[i];
        }
    }
    return p;
}

}  // namespace pacman
