#ifndef HANKEL_LAB_LATTICE_HPP
#define HANKEL_LAB_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hankel_lab/weights.hpp"

namespace hankel_lab {

/// Fock lattices are square grids of spacing h; every cell is the square of
/// side h around its center.
struct GridLayout {
    double h = 0.0;
    int i0 = 0;  // smallest x index
    int j0 = 0;  // smallest y index
    int nx = 0;
    int ny = 0;
};

/// Bergman lattices are rings at hyperbolic radius t (rho = tanh t). A ring's
/// cells are the annular sectors tanh(t_lo) <= |z| < tanh(t_hi) of angular
/// width 2 pi / count around each center.
struct RingLayout {
    double rho = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    int count = 1;
    double phase = 0.0;  // angle of the first center
    std::size_t first = 0;
};

struct Lattice {
    WeightModel model = WeightModel::fock(1.0);
    double delta = 0.0;
    double extent = 0.0;
    std::vector<Point> centers;
    std::vector<double> radii;         // covering radius, 0.75 delta tau
    std::vector<double> sep_radii;     // disjointness radius, 0.45 delta tau
    std::vector<double> cell_measure;  // lambda_omega measure of the cell

    GridLayout grid;               // Fock only
    std::vector<RingLayout> rings; // Bergman only

    std::size_t size() const { return centers.size(); }
    double total_measure() const;
};

/// Fock: grid points k h, h = delta tau, |k_x h|, |k_y h| <= K h with
/// K = ceil(extent / h). Bergman: rings rho_k = tanh(k delta tau(0)), k >= 0,
/// with round(2 pi rho_k / (delta tau(rho_k))) centers each, up to and
/// including the first ring beyond extent. Requires 0 < delta <= 1 and, for
/// Bergman, extent < 1.
Lattice build_lattice(const WeightModel& model, double delta, double extent);

/// Fock grid points of spacing delta tau inside the box [lo, hi] (inclusive).
Lattice build_lattice_box(const WeightModel& model, double delta, Point lo, Point hi);

/// Copy of `lat` with covering radii scaled by `factor`; used to probe how
/// tight the covering is.
Lattice with_radius_factor(const Lattice& lat, double factor);

/// Indices n with |z - centers[n]| < factor * radii[n], ascending.
std::vector<std::size_t> lattice_neighbors(const Lattice& lat, Point z, double factor);

/// Van der Corput radical inverse of i in the given base (Halton coordinate).
double radical_inverse(std::uint64_t i, std::uint64_t base);

struct LatticeReport {
    bool covered = false;
    double min_gap_ratio = 0.0;
    int multiplicity_max = 0;
    std::size_t probes = 0;
    std::size_t uncovered = 0;
};

/// Halton probes (bases 2, 3, starting at index seed * n_probe + 1) spread
/// uniformly in area over the union of cells.
LatticeReport verify_lattice(const Lattice& lat, int n_probe, std::uint64_t seed);

struct PartitionWeights {
    std::vector<std::size_t> indices;
    std::vector<double> weights;
};

/// C^1 profile: 1 on [0, 1], 0 on [2, inf), 1 - (3u^2 - 2u^3) with u = x - 1 between.
double smoothstep_profile(double x);

/// psi_n(z) = g_n(z) / sum_m g_m(z), g_n = S(|z - z_n| / radii[n]). Throws
/// DomainError if z lies in no covering disk.
PartitionWeights partition_of_unity(const Lattice& lat, Point z);

/// Central-difference dbar psi_n(z) = (d_x + i d_y) psi_n / 2.
Complex dbar_partition(const Lattice& lat, std::size_t n, Point z, double step);

/// Sub-cell sampling. Each cell is divided into radial x angular pieces
/// (Fock: x-subdivisions x y-subdivisions; Bergman: equal hyperbolic-radius
/// bands x equal angles), each carrying its exact lambda measure.
struct Refinement {
    int radial = 1;
    int angular = 1;
};

struct SamplePoint {
    Point z;
    double measure = 0.0;
    std::size_t cell = 0;
};

std::vector<SamplePoint> sampling_points(const Lattice& lat, Refinement refine = {});

/// CSV with header index,re,im,radius,cell_measure.
void write_lattice_csv(std::ostream& os, const Lattice& lat);

} // namespace hankel_lab

#endif
