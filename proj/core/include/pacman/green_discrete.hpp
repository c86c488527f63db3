#pragma once

// Discrete Green's function and Dirichlet problems for simple random walk.
//
// Conventions: the generator is Lf(z) = (1/4) sum_e f(z+e) - f(z). The
// Green's function G(., w) solves LF = -delta_w inside with F = 0 on the
// boundary, so G(z, w) is the expected number of visits to w before exit.
// Solves work on the SPD operator (I - P) restricted to interior sites.

#include <span>
#include <vector>

#include "pacman/domain.hpp"
#include "pacman/potential_kernel.hpp"

namespace pacman {

enum class SolverMethod { ConjugateGradient, GaussSeidel };

struct SolverConfig {
    SolverMethod method = SolverMethod::ConjugateGradient;
    double residual_tolerance = 1e-10;  // max-norm of the equation residual
    long max_iterations = 200000;

    void validate() const;
};

struct SolveStats {
    SolverMethod method = SolverMethod::ConjugateGradient;  // method that finished the solve
    long iterations = 0;
    double residual = 0.0;
};

// Real value per interior site. Boundary values are held separately and
// default to zero. The field refers to its domain, which must outlive it.
class ScalarField {
public:
    ScalarField(const LatticeDomain& domain, std::vector<double> values,
                std::vector<double> boundary_values = {});

    const LatticeDomain& domain() const { return *domain_; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    // Interior value, boundary value, or DomainError for other points.
    double at(LatticePoint p) const;

    SolveStats stats;

private:
    const LatticeDomain* domain_;
    std::vector<double> values_;
    std::vector<double> boundary_values_;
};

// G_D(., w) by a direct solve.
ScalarField green_solve(const LatticeDomain& d, LatticePoint w, const SolverConfig& cfg = {});

// Discrete-harmonic extension of boundary data h (one value per boundary
// site, in LatticeDomain::boundary() order).
ScalarField dirichlet_solve(const LatticeDomain& d, std::span<const double> h, const SolverConfig& cfg = {});

// G_D(z, w) = E^z[a(S_T - w)] - a(z - w): harmonic extension of the
// potential kernel minus the kernel itself. The default kernel integrates at
// every radius; the asymptotic form is off by ~0.05 / |x|^2, which is above
// 1e-5 across a domain of scale 32.
ScalarField green_via_potential(const LatticeDomain& d, LatticePoint w, const SolverConfig& cfg = {});
ScalarField green_via_potential(const LatticeDomain& d, LatticePoint w, const SolverConfig& cfg,
                                const PotentialKernel& kernel);

// Max-norm of (I - P)F - rhs where rhs is built from the source/boundary data
// the field was solved for. Exposed for tests.
double green_residual(const ScalarField& f, LatticePoint w);
double dirichlet_residual(const ScalarField& f, std::span<const double> h);

// Exit law of the walk from x by arc: one Dirichlet solve per arc with
// indicator boundary data. Entry k-1 is P^x(S_T in I_k).
std::vector<double> discrete_arc_measure(const LatticeDomain& d, LatticePoint x, const SolverConfig& cfg = {});

// Exit law P^x(S_T = b) per boundary site, from one Green's solve:
// P^x(S_T = b) = (1/4) sum over interior neighbours z of b of G(x, z).
std::vector<double> exit_distribution(const LatticeDomain& d, LatticePoint x, const SolverConfig& cfg = {});

}  // namespace pacman
