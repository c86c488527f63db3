#pragma once

// Desk-scale convergence experiments: the error field
// |G(0, w) - (2/pi) g(0, w)| away from the origin, rate sweeps with log-log
// fits against (ln^2 n / n), and the exit-radius log-ratio estimator.

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "pacman/arc_measure.hpp"
#include "pacman/domain.hpp"
#include "pacman/green_discrete.hpp"
#include "pacman/walk_mc.hpp"

namespace pacman {

// ln^2 n / n, the scale the error is regressed against.
double rate_scale(int n);
// (n / ln^2 n)^{c_alpha / 2}: lattice points closer than this to the origin
// are excluded from the error region.
double region_min_radius(const PacmanGeometry& g);

struct ErrorField {
    std::shared_ptr<const LatticeDomain> domain;
    ScalarField green;            // G(0, .)
    ScalarField error;            // |G - (2/pi) g| in the region, 0 elsewhere
    std::vector<char> in_region;  // per interior site
    double region_min_radius = 0.0;
    double sup_error = 0.0;
    double mean_error = 0.0;
    LatticePoint argmax;
    std::size_t region_size = 0;
};

ErrorField error_field(const PacmanGeometry& g, const SolverConfig& cfg = {});

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least squares of ln(value) on ln(scale). Needs >= 3 points, positive values.
LogLogFit fit_loglog(std::span<const std::pair<double, double>> points);

struct ScaleError {
    int n = 0;
    double sup_error = 0.0;
    double mean_error = 0.0;
    double region_min_radius = 0.0;
    LatticePoint argmax;
    long solver_iterations = 0;
};

struct RateFitResult {
    double alpha = 0.0;
    double c_alpha = 0.0;
    std::vector<ScaleError> scales;
    LogLogFit fit;
};

struct ExperimentConfig {
    std::vector<double> alphas;
    std::vector<int> ns;
    SolverConfig solver;
    WalkRunConfig walk;
    std::uint64_t seed = 0;

    void validate() const;
};

std::vector<RateFitResult> rate_sweep(const ExperimentConfig& cfg);

// Shape of the arc exit bound (k0 k)^{c-1} / ((k^c - k0^c)^2 ln^c n).
double arc_bound_shape(const PacmanGeometry& g, int k0, int k);
// Scale k0^{c-1} n^{-c} ln^{c+1} n of the exit-radius log-ratio bound.
double expdiff_bound_scale(const PacmanGeometry& g, int k0);

// measured(k) / arc_bound_shape(k) over admissible arcs |k - k0| >= 2 with
// nonzero measured mass.
struct BoundShapeCheck {
    std::vector<int> arcs;
    std::vector<double> prefactor;
    double spread = 0.0;  // max / min prefactor
};
BoundShapeCheck arc_bound_check(const PacmanGeometry& g, const ArcMeasure& measured, int k0);

struct ExpDiffResult {
    double estimate = 0.0;
    double standard_error = 0.0;
    double bound_scale = 0.0;
    int k0 = 0;
    double boundary_distance = 0.0;  // d(x, boundary)
    double separation = 0.0;         // |x - y|
    std::uint64_t trials = 0;
};

// Mean of |ln(|S_T| / |B_tau|)| with the walk started at x and an independent
// Brownian motion started at y. Requires d(x, boundary) <= 10 ln n and
// |x - y| <= 10 ln n.
ExpDiffResult expdiff_estimate(const LatticeDomain& d, LatticePoint x, Complex y, const WalkRunConfig& cfg);

}  // namespace pacman
