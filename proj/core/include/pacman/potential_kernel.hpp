#pragma once

// Potential kernel a(x) of planar simple random walk,
//   a(x) = (2 pi)^-2 \iint_{[-pi,pi]^2} (1 - cos(x . theta)) / (1 - (cos t1 + cos t2)/2) dtheta,
// and its expansion (2/pi) ln|x| + k0 + O(|x|^-2).

#include <vector>

#include "pacman/domain.hpp"

namespace pacman {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;
// (2 gamma + 3 ln 2) / pi
double potential_constant();

struct PotentialKernelConfig {
    int quadrature_points = 512;
    double asymptotic_cutoff_radius = 50.0;

    void validate() const;

    // Quadrature at every radius; no asymptotic switch.
    static PotentialKernelConfig exact_everywhere();
};

// Holds the quadrature rule for one configuration. Immutable after
// construction, safe to share between threads.
class PotentialKernel {
public:
    explicit PotentialKernel(PotentialKernelConfig cfg = {});

    const PotentialKernelConfig& config() const { return cfg_; }

    double exact(LatticePoint x) const;
    double asymptotic(LatticePoint x) const;
    // exact() inside the cutoff radius, asymptotic() beyond it.
    double operator()(LatticePoint x) const;

private:
    PotentialKernelConfig cfg_;
    std::vector<double> nodes_;    // on (0, pi)
    std::vector<double> weights_;
};

double potential_exact(LatticePoint x);
double potential_asymptotic(LatticePoint x);
double potential(LatticePoint x, const PotentialKernelConfig& cfg = {});

}  // namespace pacman
