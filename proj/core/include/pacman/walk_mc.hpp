#pragma once

// Simple random walk Monte Carlo on lattice domains: exit sites, exit law by
// arc, and visit-count estimates of the Green's function.

#include <cstdint>
#include <optional>

#include "pacman/arc_measure.hpp"
#include "pacman/domain.hpp"
#include "pacman/rng.hpp"

namespace pacman {

struct WalkRunConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    // 0 selects default_step_budget() for the domain.
    long long max_steps_per_trial = 0;

    // 100 (2n)^2 for pacman domains; 100 (diameter + 2)^2 for site sets.
    static long long default_step_budget(const LatticeDomain& d);
    // Resolved budget; throws DomainError if below the diffusive floor.
    long long budget_for(const LatticeDomain& d) const;
};

struct ExitSample {
    std::size_t boundary_index = 0;
    LatticePoint site;
    std::uint64_t visits = 0;  // occupations of the counted site, time 0 included
    std::uint64_t steps = 0;
};

// Walks from `start` until the first non-interior site. Visits are counted at
// `count_site` (default: start).
ExitSample simulate_exit(const LatticeDomain& d, LatticePoint start, TrialRng& rng, long long budget,
                         std::optional<LatticePoint> count_site = std::nullopt);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t trials = 0;
};

ArcMeasure walk_arc_measure(const LatticeDomain& d, LatticePoint x, const WalkRunConfig& cfg);

// Mean number of visits to w before exit, for walks started at `start`
// (default: w).
MonteCarloEstimate green_mc(const LatticeDomain& d, LatticePoint w, const WalkRunConfig& cfg,
                            std::optional<LatticePoint> start = std::nullopt);

// Mean exit time from x.
MonteCarloEstimate mean_exit_steps(const LatticeDomain& d, LatticePoint x, const WalkRunConfig& cfg);

}  // namespace pacman
