#ifndef HANKEL_LAB_ASYMPTOTICS_HPP
#define HANKEL_LAB_ASYMPTOTICS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hankel_lab/hankel.hpp"
#include "hankel_lab/ida.hpp"
#include "hankel_lab/lattice.hpp"
#include "hankel_lab/rearrange.hpp"
#include "hankel_lab/symbol.hpp"
#include "hankel_lab/weights.hpp"

namespace hankel_lab {

/// Least-squares slope of log a_n against log n over n in [n_lo, n_hi].
/// Throws DomainError on n_lo < 1, a short window or non-positive entries.
double loglog_slope(const std::vector<double>& a, int n_lo, int n_hi);

struct DecayReport {
    int n_lo = 0;
    int n_hi = 0;
    double exponent_a = 0.0;
    double exponent_b = 0.0;
    double ratio_min = 0.0;  // of a_n / (c* b_n), c* the geometric mean of a_n / b_n
    double ratio_max = 0.0;
    double spread() const { return ratio_max / ratio_min; }
};

/// Sequences are indexed from n = 0; the window refers to those indices.
DecayReport compare_decay(const std::vector<double>& a, const std::vector<double>& b, int n_lo, int n_hi);

struct DecayEquivalenceOptions {
    int n_lo = 5;
    int n_hi = 50;
    /// G* is sampled at t = kappa * n.
    double kappa = 1.0;
    IdaOptions ida{};
};

struct DecayEquivalenceReport {
    SpectrumResult spectrum;
    RearrangementCurve g_star;
    std::vector<double> g_star_samples;  // G*(kappa n), n < N
    bool degenerate = false;   // spectrum and G both vanish
    bool compared = false;     // both sequences positive on the window
    DecayReport decay;         // valid when compared
    double exponent_s = 0.0;   // slope of s_n alone (when positive on the window)
    double g_support_measure = 0.0;
};

DecayEquivalenceReport decay_equivalence_report(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                                   int N, const DecayEquivalenceOptions& options = {});

/// max G over the profile.
double bda_estimate(const IdaProfile& profile);

/// max G over sample points with |z| > fraction * extent.
struct VdaReport {
    std::vector<double> fractions{0.5, 0.7, 0.9};
    std::vector<double> outer_max;
};
VdaReport vda_estimate(const IdaProfile& profile, double extent);

struct BlochReport {
    /// G(conj phi)(z) / (tau(z) sup_{D(z, delta tau(z))} |phi'|) over sample points
    double pointwise_ratio_min = 0.0;
    double pointwise_ratio_max = 0.0;
    bool degenerate = false;  // phi' == 0
    /// (G(conj phi))* / (tau |phi'|)* on log-spaced t in [t_lo, t_hi], rescaled
    double t_lo = 1.0;
    double t_hi = 50.0;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double spread() const { return ratio_max / ratio_min; }
};

BlochReport bloch_compare(const Symbol& phi, const WeightModel& model, const Lattice& lat, double delta,
                          const IdaOptions& options = {});

struct BergerCoburnReport {
    double weak_f = 0.0;     // ||H_f||_{S^{p,inf}} on the truncation
    double weak_conj = 0.0;  // same for conj f
    double ratio = 0.0;      // weak_f / weak_conj
    bool degenerate = false; // one side vanishes
    double mo_weak_f = 0.0;  // weak-L^p of MO(f) on the lattice
    double mo_weak_conj = 0.0;
};

/// Requires f.bounded and p > 1.
BergerCoburnReport berger_coburn(const Symbol& f, const WeightModel& model, int N, double p,
                                 const Lattice& lat, const IdaOptions& options = {});

/// n log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

struct ConvexTraceReport {
    std::vector<double> thetas;
    std::vector<double> lhs;        // L(theta) = sum (s_n - theta)^+
    std::vector<double> rhs_upper;  // R(theta, B)
    std::vector<double> rhs_lower;  // R(theta, 1/B)
    double B = 0.0;
    double C = 0.0;
    bool passed = false;
};

/// Searches B, C on {1, 1.5, ..., 16} for L <= C R(theta, B) and
/// R(theta, 1/B) <= C L at every theta; picks the pair minimising max(B, C).
ConvexTraceReport convex_trace_comparison(const SpectrumResult& spectrum, const IdaProfile& profile,
                                 const std::vector<double>& thetas);

ConvexTraceReport convex_trace_check(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                                  int N, const std::vector<double>& thetas, const IdaOptions& options = {});

/// Flat key=value lines.
void write_report(std::ostream& os, const DecayReport& r);
void write_report(std::ostream& os, const ConvexTraceReport& r);

} // namespace hankel_lab

#endif
