#pragma once

// Pacman domains D_alpha(n) and their lattice discretization.
//
// The continuous domain is the open disk sector
//   { r e^{i theta} : 0 < theta < 2 pi - alpha, 0 < r < 2n } - z0,
// where z0 is the lattice point nearest n e^{i(pi - alpha/2)}. Its boundary
// is split into N radial arcs I_k of width ln^2 n measured from the tip -z0;
// the last arc also carries the circular part.

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pacman {

using Complex = std::complex<double>;

struct LatticePoint {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(LatticePoint, LatticePoint) = default;
    // Row-major by y, then x.
    friend constexpr std::strong_ordering operator<=>(LatticePoint a, LatticePoint b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }

    Complex to_complex() const { return {static_cast<double>(x), static_cast<double>(y)}; }
    long long norm2() const { return 1LL * x * x + 1LL * y * y; }
};

constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }

// Unit steps in neighbor-table order: +x, -x, +y, -y.
inline constexpr std::array<LatticePoint, 4> kLatticeSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

// Smallest supported scale: ln^2 8 > 4 and N >= 2.
inline constexpr int kMinScale = 8;

struct PacmanGeometry {
    double alpha = 0.0;    // wedge angle removed, radians in [0, pi]
    int n = 0;             // scale; inner radius is within one unit of n
    LatticePoint z0;       // the tip sits at -z0
    double c_alpha = 0.5;  // pi / (2 pi - alpha)
    int arc_count = 0;     // N = ceil(2n / ln^2 n)
    double radius = 0.0;   // 2n

    // Radial width ln^2 n of one boundary arc.
    double arc_width() const;
    // Opening angle 2 pi - alpha of the sector.
    double opening() const;
    Complex tip() const { return -z0.to_complex(); }
};

double c_alpha(double alpha);
int arc_count_for(int n);

PacmanGeometry build_geometry(double alpha, int n);

// Strict membership in the open continuous domain. Points on either wedge
// edge (including the alpha = 0 slit) and on the circle are outside.
bool contains(const PacmanGeometry& g, Complex z);
inline bool contains(const PacmanGeometry& g, LatticePoint z) { return contains(g, z.to_complex()); }

// Radial bucket of a boundary point; all points at or beyond (N-1) ln^2 n
// fold into the last arc.
int arc_index(const PacmanGeometry& g, Complex z);
inline int arc_index(const PacmanGeometry& g, LatticePoint z) { return arc_index(g, z.to_complex()); }

struct BoundaryProjection {
    Complex point;    // nearest point of the continuous boundary
    double distance;  // |z - point|
    int arc;          // arc index of `point`
};

// Nearest point of the continuous boundary (two rays and the circular arc).
BoundaryProjection project_to_boundary(const PacmanGeometry& g, Complex z);

class LatticeDomain {
public:
    // Boundary neighbors are stored as ~boundary_index (always negative).
    using NeighborTable = std::array<std::int32_t, 4>;

    static LatticeDomain from_geometry(const PacmanGeometry& g);
    // Arbitrary finite interior set (used for hand-checkable shapes). Every
    // boundary site gets arc 1 and arc_count() is 1.
    static LatticeDomain from_sites(std::span<const LatticePoint> interior);

    const std::optional<PacmanGeometry>& geometry() const { return geometry_; }

    std::span<const LatticePoint> interior() const { return interior_; }
    std::span<const LatticePoint> boundary() const { return boundary_; }
    // Arc index (1-based) per boundary site.
    std::span<const int> boundary_arcs() const { return boundary_arcs_; }
    int arc_count() const { return arc_count_; }

    std::size_t interior_size() const { return interior_.size(); }
    std::size_t boundary_size() const { return boundary_.size(); }

    std::optional<std::size_t> interior_index(LatticePoint p) const;
    std::optional<std::size_t> boundary_index(LatticePoint p) const;
    bool is_interior(LatticePoint p) const { return interior_index(p).has_value(); }

    const NeighborTable& neighbors(std::size_t interior_idx) const { return neighbors_[interior_idx]; }
    std::span<const NeighborTable> neighbor_table() const { return neighbors_; }

    static constexpr bool is_boundary_code(std::int32_t code) { return code < 0; }
    static constexpr std::size_t boundary_of(std::int32_t code) { return static_cast<std::size_t>(~code); }

private:
    LatticeDomain() = default;
    void finalize(std::vector<LatticePoint> interior);
    std::int32_t lookup(LatticePoint p) const;

    std::optional<PacmanGeometry> geometry_;
    std::vector<LatticePoint> interior_;
    std::vector<LatticePoint> boundary_;
    std::vector<int> boundary_arcs_;
    std::vector<NeighborTable> neighbors_;
    int arc_count_ = 1;

    // Dense site codes over the bounding box of interior and boundary.
    LatticePoint grid_min_;
    int grid_width_ = 0;
    int grid_height_ = 0;
    std::vector<std::int32_t> grid_;
};

inline LatticeDomain build_lattice_domain(const PacmanGeometry& g) { return LatticeDomain::from_geometry(g); }

}  // namespace pacman
