#include "pacman/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pacman/errors.hpp"
#include "pacman/green_continuous.hpp"
#include "pacman/parallel.hpp"
#include "pacman/rng.hpp"

namespace pacman {
namespace {

double log_squared(int n) {
    const double l = std::log(static_cast<double>(n));
    return l * l;
}

}  // namespace

double rate_scale(int n) { return log_squared(n) / n; }

double region_min_radius(const PacmanGeometry& g) { return std::pow(g.n / log_squared(g.n), g.c_alpha / 2.0); }

ErrorField error_field(const PacmanGeometry& g, const SolverConfig& cfg) {
    auto domain = std::make_shared<const LatticeDomain>(LatticeDomain::from_geometry(g));
    const LatticePoint origin{0, 0};
    if (!domain->is_interior(origin)) throw DomainError("the origin is not an interior site of this domain");

    // G(0, .) = G(., 0): one solve with the source at the origin.
    ScalarField green = green_solve(*domain, origin, cfg);

    const double radius = region_min_radius(g);
    const auto sites = domain->interior();
    std::vector<double> err(sites.size(), 0.0);
    std::vector<char> mask(sites.size(), 0);
    double sup = 0.0;
    double total = 0.0;
    std::size_t count = 0;
    LatticePoint argmax;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const LatticePoint w = sites[i];
        if (w == origin || std::sqrt(static_cast<double>(w.norm2())) < radius) continue;
        const double cont = 2.0 / std::numbers::pi * green_pacman(g, origin.to_complex(), w.to_complex());
        const double e = std::abs(green[i] - cont);
        err[i] = e;
        mask[i] = 1;
        total += e;
        ++count;
        if (e > sup) {
            sup = e;
            argmax = w;
        }
    }
    if (count == 0) throw DomainError("error region is empty");

    ScalarField error(*domain, std::move(err));
    error.stats = green.stats;
    return ErrorField{domain, std::move(green), std::move(error), std::move(mask), radius, sup,
                      total / static_cast<double>(count), argmax, count};
}

LogLogFit fit_loglog(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw FitError("log-log fit needs at least 3 points, got " + std::to_string(points.size()));
    std::vector<double> xs, ys;
    for (const auto& [scale, value] : points) {
        if (!(scale > 0.0) || !(value > 0.0) || !std::isfinite(scale) || !std::isfinite(value)) {
            throw DomainError("log-log fit needs positive finite scales and values");
        }
        xs.push_back(std::log(scale));
        ys.push_back(std::log(value));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw FitError("log-log fit needs at least two distinct scales");

    LogLogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    // A constant series is fitted exactly by slope 0.
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

void ExperimentConfig::validate() const {
    if (alphas.empty()) throw DomainError("at least one alpha is required");
    for (double a : alphas) {
        if (!(a >= 0.0 && a <= std::numbers::pi)) throw DomainError("alpha must lie in [0, pi]");
    }
    if (ns.size() < 3) throw FitError("a rate fit needs at least 3 scales, got " + std::to_string(ns.size()));
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < kMinScale) throw DomainError("every n must be >= " + std::to_string(kMinScale));
        if (i > 0 && ns[i] <= ns[i - 1]) throw DomainError("ns must be strictly increasing");
    }
    solver.validate();
}

std::vector<RateFitResult> rate_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t na = cfg.alphas.size();
    const std::size_t nn = cfg.ns.size();

    struct Task {
        bool ok = false;
        ScaleError scale;
    };
    const auto tasks = parallel_chunks(na * nn, 1, [&](std::uint64_t begin, std::uint64_t) {
        const std::size_t ai = begin / nn;
        const std::size_t ni = begin % nn;
        Task t;
        try {
            const PacmanGeometry g = build_geometry(cfg.alphas[ai], cfg.ns[ni]);
            const ErrorField ef = error_field(g, cfg.solver);
            t.scale = {g.n, ef.sup_error, ef.mean_error, ef.region_min_radius, ef.argmax, ef.green.stats.iterations};
            t.ok = ef.sup_error > 0.0;
        } catch (const ConvergenceError&) {
            t.ok = false;
        }
        return t;
    });

    std::vector<RateFitResult> results;
    for (std::size_t ai = 0; ai < na; ++ai) {
        RateFitResult r;
        r.alpha = cfg.alphas[ai];
        r.c_alpha = c_alpha(r.alpha);
        std::vector<std::pair<double, double>> points;
        for (std::size_t ni = 0; ni < nn; ++ni) {
            const Task& t = tasks[ai * nn + ni];
            if (!t.ok) continue;
            r.scales.push_back(t.scale);
            points.emplace_back(rate_scale(t.scale.n), t.scale.sup_error);
        }
        if (points.size() < 3) {
            throw FitError("alpha " + std::to_string(r.alpha) + ": only " + std::to_string(points.size()) +
                           " scales solved successfully");
        }
        r.fit = fit_loglog(points);
        results.push_back(std::move(r));
    }
    return results;
}

double arc_bound_shape(const PacmanGeometry& g, int k0, int k) {
    const double c = g.c_alpha;
    const double gap = std::pow(k, c) - std::pow(k0, c);
    return std::pow(static_cast<double>(k0) * k, c - 1.0) / (gap * gap * std::pow(std::log(g.n), c));
}

double expdiff_bound_scale(const PacmanGeometry& g, int k0) {
    const double c = g.c_alpha;
    const double l = std::log(static_cast<double>(g.n));
    return std::pow(k0, c - 1.0) * std::pow(g.n, -c) * std::pow(l, c + 1.0);
}

BoundShapeCheck arc_bound_check(const PacmanGeometry& g, const ArcMeasure& measured, int k0) {
    BoundShapeCheck out;
    for (int k = 1; k <= measured.arc_count(); ++k) {
        if (std::abs(k - k0) < 2 || !(measured.at(k) > 0.0)) continue;
        out.arcs.push_back(k);
        out.prefactor.push_back(measured.at(k) / arc_bound_shape(g, k0, k));
    }
    if (out.prefactor.empty()) throw FitError("no admissible arcs with positive measure");
    const auto [lo, hi] = std::minmax_element(out.prefactor.begin(), out.prefactor.end());
    out.spread = *hi / *lo;
    return out;
}

ExpDiffResult expdiff_estimate(const LatticeDomain& d, LatticePoint x, Complex y, const WalkRunConfig& cfg) {
    if (!d.geometry()) throw DomainError("expdiff_estimate needs a pacman domain");
    const PacmanGeometry& g = *d.geometry();
    if (!d.is_interior(x)) throw DomainError("x must be an interior lattice site");
    if (!contains(g, y)) throw DomainError("y must lie strictly inside the domain");
    if (cfg.trials == 0) throw DomainError("trials must be positive");

    const double reach = 10.0 * std::log(static_cast<double>(g.n));
    const BoundaryProjection near = project_to_boundary(g, x.to_complex());
    const double separation = std::abs(x.to_complex() - y);
    if (near.distance > reach) {
        throw DomainError("x is " + std::to_string(near.distance) + " from the boundary; at most 10 ln n = " +
                          std::to_string(reach) + " is allowed");
    }
    if (separation > reach) {
        throw DomainError("|x - y| = " + std::to_string(separation) + " exceeds 10 ln n = " + std::to_string(reach));
    }

    const long long budget = cfg.budget_for(d);
    struct Sums {
        double sum = 0.0;
        double sum_sq = 0.0;
    };
    const auto partials = parallel_chunks(cfg.trials, 1024, [&](std::uint64_t begin, std::uint64_t end) {
        Sums s;
        for (std::uint64_t t = begin; t < end; ++t) {
            TrialRng rng(cfg.seed, t);
            const ExitSample walk = simulate_exit(d, x, rng, budget);
            const Complex brownian = sample_bm_exit(g, y, rng.uniform_open());
            const double v = std::abs(std::log(std::sqrt(static_cast<double>(walk.site.norm2())) / std::abs(brownian)));
            s.sum += v;
            s.sum_sq += v * v;
        }
        return s;
    });
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }

    ExpDiffResult r;
    const double n = static_cast<double>(cfg.trials);
    r.estimate = sum / n;
    const double var = cfg.trials > 1 ? std::max(0.0, (sum_sq - n * r.estimate * r.estimate) / (n - 1.0)) : 0.0;
    r.standard_error = std::sqrt(var / n);
    r.k0 = near.arc;
    r.bound_scale = expdiff_bound_scale(g, r.k0);
    r.boundary_distance = near.distance;
    r.separation = separation;
    r.trials = cfg.trials;
    return r;
}

}  // namespace pacman
