#ifndef HANKEL_LAB_IDA_HPP
#define HANKEL_LAB_IDA_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hankel_lab/lattice.hpp"
#include "hankel_lab/quadrature.hpp"
#include "hankel_lab/symbol.hpp"
#include "hankel_lab/weights.hpp"

namespace hankel_lab {

inline constexpr int kDefaultIdaDegree = 24;
inline constexpr double kDefaultIdaTolerance = 1e-10;

/// Best L^2 approximation of f on D(center, radius) by polynomials in
/// u = (w - center) / radius of degree <= degree_used:
/// value = sqrt(mean |f - sum coeffs[k] u^k|^2).
struct HolomorphicFit {
    double value = 0.0;
    std::vector<Complex> coeffs;
    int degree_used = 0;
    Point center;
    double radius = 0.0;

    /// h(w) = sum coeffs[k] ((w - center) / radius)^k
    Complex evaluate(Point w) const;
};

/// The monomials u^k are orthogonal on the disk, so the projection is built
/// degree by degree on the explicit residual. Stops at max_degree, when the
/// residual drops below tol * M(f), or after six consecutive degrees that
/// each lower the value by less than tol * value.
HolomorphicFit best_holomorphic_distance(const Symbol& f, Point center, double radius,
                                         int max_degree, const DiskRule& rule,
                                         double tol = kDefaultIdaTolerance);

/// sqrt(mean |f - mean f|^2) over D(center, radius).
double mo(const Symbol& f, Point center, double radius, const DiskRule& rule);
/// mean of f over D(center, radius).
Complex hat_avg(const Symbol& f, Point center, double radius, const DiskRule& rule);
/// sqrt(mean |f|^2) over D(center, radius).
double m_avg(const Symbol& f, Point center, double radius, const DiskRule& rule);

struct IdaOptions {
    int max_degree = kDefaultIdaDegree;
    double tol = kDefaultIdaTolerance;
    DiskRule rule = disk_rule();
    Refinement refine{};
};

/// G, MO and the disk average at every sample point of the lattice (the
/// centers, or sub-cell points under refinement), with disk radius
/// delta * tau(z).
struct IdaProfile {
    WeightModel model = WeightModel::fock(1.0);
    double delta = 0.0;
    std::vector<Point> points;
    std::vector<double> tau;
    std::vector<double> measure;
    std::vector<std::size_t> cell;
    std::vector<double> G;
    std::vector<double> MO;
    std::vector<Complex> hat;
    std::vector<int> degree_used;

    std::size_t size() const { return points.size(); }
};

/// Throws DomainError if delta differs from lat.delta or a Bergman disk
/// reaches the unit circle.
IdaProfile ida_profile(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                       const IdaOptions& options = {});

/// CSV header index,re,im,tau,cell_measure,G,MO,hat_re,hat_im,degree_used.
void write_profile_csv(std::ostream& os, const IdaProfile& profile);

struct DecompositionReport {
    double B = 2.0;
    std::size_t probes_used = 0;
    std::size_t probes_skipped = 0;
    double max_ratio_dbar = 0.0;    // tau |dbar f1| / G_{B^2 delta}
    double max_ratio_m_dbar = 0.0;  // M(tau dbar f1) / G_{B^2 delta}
    double max_ratio_m_f2 = 0.0;    // M(f2) / G_{B^2 delta}
    double max_abs_f2 = 0.0;        // sup |f2| over probe disks
    double max_abs_dbar = 0.0;      // sup tau |dbar f1| over probe disks
};

/// f = f1 + f2 with f1 = sum_n h_n psi_n, h_n the best holomorphic fit on
/// D(z_n, delta tau(z_n)) and psi_n the lattice partition of unity; f1 is
/// zero off the lattice coverage. dbar f1 uses central differences with step
/// 1e-4 tau(z). Ratios with vanishing G (below 1e-12) count as 0 when the
/// numerator is below 1e-8 and +inf otherwise.
struct Decomposition {
    Symbol f1;
    Symbol f2;
    DecompositionReport report;
};

struct DecomposeOptions {
    IdaOptions ida{};
    int n_probe = 64;
    std::uint64_t seed = 0;
    /// disk rule for the averages M(.) in the report
    DiskRule probe_rule = disk_rule(6, 16);
};

Decomposition decompose(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                        const DecomposeOptions& options = {});

} // namespace hankel_lab

#endif
