#include "hankel_lab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"

namespace hankel_lab {

namespace {

void check(const WeightedSamples& s) {
    if (s.values.size() != s.measures.size()) throw DomainError("samples: values and measures differ in length");
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (!std::isfinite(s.values[i]) || s.values[i] < 0.0)
            throw DomainError("samples: values must be finite and non-negative");
        if (!std::isfinite(s.measures[i]) || !(s.measures[i] > 0.0))
            throw DomainError("samples: measures must be finite and positive");
    }
}

void check_p(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("p must be finite and positive");
}

} // namespace

double RearrangementCurve::evaluate(double t) const {
    if (!(t >= 0.0)) throw DomainError("rearrangement evaluated at negative t");
    if (values.empty() || t >= breakpoints.back()) return 0.0;
    // first breakpoint strictly greater than t, minus one
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
    return values[std::size_t(it - breakpoints.begin()) - 1];
}

double distribution(const WeightedSamples& s, double level) {
    check(s);
    if (!(level >= 0.0)) throw DomainError("distribution level must be >= 0");
    double d = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        if (s.values[i] > level) d += s.measures[i];
    return d;
}

RearrangementCurve rearrangement(const WeightedSamples& s) {
    check(s);
    if (s.values.empty()) throw DomainError("rearrangement of an empty sample set");
    std::vector<std::size_t> order(s.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (s.values[a] != s.values[b]) return s.values[a] > s.values[b];
        return a < b;
    });
    RearrangementCurve c;
    c.breakpoints.push_back(0.0);
    double t = 0.0;
    for (std::size_t i : order) {
        const double v = s.values[i];
        if (v <= 0.0) break;
        t += s.measures[i];
        if (!c.values.empty() && c.values.back() == v) {
            c.breakpoints.back() = t;
        } else {
            c.values.push_back(v);
            c.breakpoints.push_back(t);
        }
    }
    c.total_measure = t;
    return c;
}

double weak_lp(const RearrangementCurve& curve, double p) {
    check_p(p);
    double best = 0.0;
    for (std::size_t k = 0; k < curve.values.size(); ++k)
        best = std::max(best, curve.values[k] * std::pow(curve.breakpoints[k + 1], 1.0 / p));
    return best;
}

double weak_lp(const WeightedSamples& s, double p) { return weak_lp(rearrangement(s), p); }

double lp_norm(const WeightedSamples& s, double p) {
    check(s);
    check_p(p);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i) acc += std::pow(s.values[i], p) * s.measures[i];
    return std::pow(acc, 1.0 / p);
}

double lp_norm(const RearrangementCurve& curve, double p) {
    check_p(p);
    double acc = 0.0;
    for (std::size_t k = 0; k < curve.values.size(); ++k)
        acc += std::pow(curve.values[k], p) * (curve.breakpoints[k + 1] - curve.breakpoints[k]);
    return std::pow(acc, 1.0 / p);
}

ClosedFormReport rearrangement_closed_form_check(const WeightModel& model, double delta, double extent,
                                                 Refinement refine) {
    if (model.is_fock() || model.alpha() != 0.0)
        throw DomainError("closed-form rearrangement check needs the Bergman model with alpha = 0");
    const Lattice lat = build_lattice(model, delta, extent);
    WeightedSamples s;
    for (const SamplePoint& sp : sampling_points(lat, refine)) {
        s.values.push_back(tau(model, sp.z));
        s.measures.push_back(sp.measure);
    }
    const RearrangementCurve curve = rearrangement(s);
    ClosedFormReport rep;
    rep.total_measure = std::accumulate(s.measures.begin(), s.measures.end(), 0.0);
    rep.t_hi = std::min(rep.t_hi, 0.8 * rep.total_measure);
    constexpr int kPoints = 400;
    if (rep.t_hi > rep.t_lo) {
        for (int i = 0; i < kPoints; ++i) {
            const double t = rep.t_lo * std::pow(rep.t_hi / rep.t_lo, double(i) / (kPoints - 1));
            const double exact = tau_rearrangement_closed_form(t);
            rep.max_relative_error = std::max(rep.max_relative_error, std::abs(curve.evaluate(t) - exact) / exact);
            ++rep.points_checked;
        }
    }
    rep.weak_l1 = weak_lp(curve, 1.0);
    rep.weak_l1_expected = tau_rearrangement_closed_form(0.0);
    rep.weak_l1_relative_error = std::abs(rep.weak_l1 - rep.weak_l1_expected) / rep.weak_l1_expected;
    return rep;
}

void write_curve_csv(std::ostream& os, const RearrangementCurve& curve) {
    os << "t,fstar\n";
    for (std::size_t k = 0; k < curve.values.size(); ++k)
        os << format_double(curve.breakpoints[k]) << ',' << format_double(curve.values[k]) << '\n';
    os << format_double(curve.total_measure) << ",0\n";
}

} // namespace hankel_lab
