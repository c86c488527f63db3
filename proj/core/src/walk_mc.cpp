#include "pacman/walk_mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pacman/errors.hpp"
#include "pacman/parallel.hpp"

namespace pacman {
namespace {

constexpr std::uint64_t kTrialsPerChunk = 1024;

std::size_t require_interior(const LatticeDomain& d, LatticePoint p) {
    const auto idx = d.interior_index(p);
    if (!idx) {
        throw DomainError("start (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is not an interior site");
    }
    return *idx;
}

void require_trials(const WalkRunConfig& cfg) {
    if (cfg.trials == 0) throw DomainError("trials must be positive");
}

// Shared driver for the scalar estimators: per-trial integer samples summed
// exactly, so the aggregate is independent of scheduling.
struct MomentSums {
    std::uint64_t sum = 0;
    long double sum_sq = 0.0L;
};

template <class Sample>
MonteCarloEstimate estimate_mean(const WalkRunConfig& cfg, Sample sample) {
    const auto partials = parallel_chunks(cfg.trials, kTrialsPerChunk, [&](std::uint64_t begin, std::uint64_t end) {
        MomentSums s;
        for (std::uint64_t t = begin; t < end; ++t) {
            TrialRng rng(cfg.seed, t);
            const std::uint64_t v = sample(rng);
            s.sum += v;
            s.sum_sq += static_cast<long double>(v) * v;
        }
        return s;
    });
    std::uint64_t sum = 0;
    long double sum_sq = 0.0L;
    for (const auto& p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }
    const long double n = static_cast<long double>(cfg.trials);
    const long double mean = sum / n;
    long double var = cfg.trials > 1 ? (sum_sq - n * mean * mean) / (n - 1.0L) : 0.0L;
    if (var < 0.0L) var = 0.0L;
    return {static_cast<double>(mean), static_cast<double>(std::sqrt(var / n)), cfg.trials};
}

}  // namespace

long long WalkRunConfig::default_step_budget(const LatticeDomain& d) {
    if (const auto& g = d.geometry()) return 100LL * (2LL * g->n) * (2LL * g->n);
    const auto pts = d.boundary();
    int xmin = pts.front().x, xmax = xmin, ymin = pts.front().y, ymax = ymin;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const long long span = std::max(xmax - xmin, ymax - ymin) + 2LL;
    return 100LL * span * span;
}

long long WalkRunConfig::budget_for(const LatticeDomain& d) const {
    const long long floor = default_step_budget(d);
    if (max_steps_per_trial == 0) return floor;
    if (max_steps_per_trial < floor) {
        throw DomainError("max_steps_per_trial must be >= " + std::to_string(floor) + " for this domain");
    }
    return max_steps_per_trial;
}

ExitSample simulate_exit(const LatticeDomain& d, LatticePoint start, TrialRng& rng, long long budget,
                         std::optional<LatticePoint> count_site) {
    std::size_t site = require_interior(d, start);
    const std::size_t counted = count_site ? d.interior_index(*count_site).value_or(SIZE_MAX) : site;
    const auto table = d.neighbor_table();

    ExitSample out;
    if (site == counted) out.visits = 1;
    std::uint64_t bits = 0;
    int bits_left = 0;
    for (;;) {
        if (static_cast<long long>(out.steps) >= budget) {
            throw BudgetError("walk exceeded its step budget of " + std::to_string(budget), budget);
        }
        if (bits_left == 0) {
            bits = rng();
            bits_left = 32;
        }
        const std::int32_t code = table[site][bits & 3u];
        bits >>= 2;
        --bits_left;
        ++out.steps;
        if (LatticeDomain::is_boundary_code(code)) {
            out.boundary_index = LatticeDomain::boundary_of(code);
            out.site = d.boundary()[out.boundary_index];
            return out;
        }
        site = static_cast<std::size_t>(code);
        if (site == counted) ++out.visits;
    }
}

ArcMeasure walk_arc_measure(const LatticeDomain& d, LatticePoint x, const WalkRunConfig& cfg) {
    require_trials(cfg);
    require_interior(d, x);
    const long long budget = cfg.budget_for(d);
    const auto arcs = d.boundary_arcs();
    const std::size_t arc_count = static_cast<std::size_t>(d.arc_count());

    const auto partials = parallel_chunks(cfg.trials, kTrialsPerChunk, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> counts(arc_count, 0);
        for (std::uint64_t t = begin; t < end; ++t) {
            TrialRng rng(cfg.seed, t);
            const ExitSample s = simulate_exit(d, x, rng, budget);
            ++counts[static_cast<std::size_t>(arcs[s.boundary_index] - 1)];
        }
        return counts;
    });

    ArcMeasure m;
    m.trials = cfg.trials;
    m.counts.assign(arc_count, 0);
    for (const auto& p : partials) {
        for (std::size_t k = 0; k < arc_count; ++k) m.counts[k] += p[k];
    }
    const double n = static_cast<double>(cfg.trials);
    for (std::size_t k = 0; k < arc_count; ++k) {
        const double p = static_cast<double>(m.counts[k]) / n;
        m.probability.push_back(p);
        m.standard_error.push_back(std::sqrt(p * (1.0 - p) / n));
    }
    return m;
}

MonteCarloEstimate green_mc(const LatticeDomain& d, LatticePoint w, const WalkRunConfig& cfg,
                            std::optional<LatticePoint> start) {
    require_trials(cfg);
    require_interior(d, w);
    const LatticePoint from = start.value_or(w);
    require_interior(d, from);
    const long long budget = cfg.budget_for(d);
    return estimate_mean(cfg, [&](TrialRng& rng) { return simulate_exit(d, from, rng, budget, w).visits; });
}

MonteCarloEstimate mean_exit_steps(const LatticeDomain& d, LatticePoint x, const WalkRunConfig& cfg) {
    require_trials(cfg);
    require_interior(d, x);
    const long long budget = cfg.budget_for(d);
    return estimate_mean(cfg, [&](TrialRng& rng) { return simulate_exit(d, x, rng, budget).steps; });
}

}  // namespace pacman
