#pragma once

// Continuous Green's function and Brownian exit law on pacman domains, in
// closed form through the conformal chain
//   D_alpha --f--> upper half-disk --m--> upper half-plane,
//   f(z) = ((z + z0) / 2n)^{c_alpha},   m(u) = -(u + 1/u).
// The power map uses arg(z + z0) in [0, 2 pi), continuous on all of D_alpha.

#include "pacman/arc_measure.hpp"
#include "pacman/domain.hpp"

namespace pacman {

Complex map_to_halfdisk(const PacmanGeometry& g, Complex z);
Complex halfdisk_to_halfplane(Complex u);

// Composite m(f(z)).
inline Complex map_to_halfplane(const PacmanGeometry& g, Complex z) {
    return halfdisk_to_halfplane(map_to_halfdisk(g, z));
}

// log|a - conj(b)| - log|a - b| for a, b in the upper half-plane.
double green_halfplane(Complex a, Complex b);

// Reflection formula on the unit upper half-disk,
//   log|(1 - u conj(v))(u - conj(v))| - log|(u - v)(1 - u v)|.
double green_halfdisk(Complex u, Complex v);

double green_pacman(const PacmanGeometry& g, Complex z, Complex w);
// Same quantity through green_halfdisk(f(z), f(w)); an independent route.
double green_pacman_via_halfdisk(const PacmanGeometry& g, Complex z, Complex w);

// Harmonic measure of the real interval [lo, hi] seen from p in the upper
// half-plane (Cauchy law). Endpoints may be infinite.
double halfplane_interval_measure(Complex p, double lo, double hi);

// omega(x, I_k; D_alpha) for every arc, exactly.
ArcMeasure bm_arc_measure(const PacmanGeometry& g, Complex x);

// Exact Brownian exit point from y by inverting the Cauchy CDF at `uniform`
// (in (0, 1)) and pulling the half-plane point back through m and f.
Complex sample_bm_exit(const PacmanGeometry& g, Complex y, double uniform);

}  // namespace pacman
