#ifndef HANKEL_LAB_REARRANGE_HPP
#define HANKEL_LAB_REARRANGE_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "hankel_lab/lattice.hpp"
#include "hankel_lab/weights.hpp"

namespace hankel_lab {

/// |f| sampled cellwise: values[i] held on a set of lambda-measure measures[i].
struct WeightedSamples {
    std::vector<double> values;
    std::vector<double> measures;
};

/// Right-continuous step function: values[k] on [breakpoints[k], breakpoints[k+1]),
/// zero from breakpoints.back() = total_measure on. Values strictly decrease
/// and are positive.
struct RearrangementCurve {
    std::vector<double> breakpoints;
    std::vector<double> values;
    double total_measure = 0.0;

    double evaluate(double t) const;
};

/// lambda({|f| > level}).
double distribution(const WeightedSamples& s, double level);

/// Sort by value (descending, ties by original index), merge equal values,
/// drop zero values.
RearrangementCurve rearrangement(const WeightedSamples& s);

/// sup_t t^{1/p} f*(t), exact on the step function.
double weak_lp(const RearrangementCurve& curve, double p);
double weak_lp(const WeightedSamples& s, double p);

/// (sum values^p measures)^{1/p}; p must be finite and positive.
double lp_norm(const WeightedSamples& s, double p);
/// (int_0^inf f*(t)^p dt)^{1/p}.
double lp_norm(const RearrangementCurve& curve, double p);

/// Sampled rearrangement of tau on the Bergman disk (alpha = 0) against
/// tau*(t) = sqrt(pi)/(1+t).
struct ClosedFormReport {
    double max_relative_error = 0.0;
    double t_lo = 0.5;
    double t_hi = 100.0;
    std::size_t points_checked = 0;
    double total_measure = 0.0;
    double weak_l1 = 0.0;
    double weak_l1_expected = 0.0;
    double weak_l1_relative_error = 0.0;
};

inline double tau_rearrangement_closed_form(double t) { return 1.7724538509055160273 / (1.0 + t); }

/// Checks t on 400 log-spaced points of [0.5, 100] capped at 80% of the
/// captured measure. Throws DomainError unless model is Bergman alpha = 0.
ClosedFormReport rearrangement_closed_form_check(const WeightModel& model, double delta = 0.2,
                                                 double extent = 0.999, Refinement refine = {32, 1});

/// CSV header t,fstar; one row per breakpoint, the last carrying 0.
void write_curve_csv(std::ostream& os, const RearrangementCurve& curve);

} // namespace hankel_lab

#endif
