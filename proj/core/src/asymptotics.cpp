#include "hankel_lab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"

namespace hankel_lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_window(std::size_t size, int n_lo, int n_hi) {
    if (n_lo < 1) throw DomainError("decay window must start at n >= 1");
    if (n_hi <= n_lo) throw DomainError("decay window needs n_hi > n_lo");
    if (std::size_t(n_hi) >= size) throw DomainError("decay window exceeds the sequence length");
}

bool positive_on(const std::vector<double>& a, int n_lo, int n_hi) {
    if (n_hi < 0 || std::size_t(n_hi) >= a.size()) return false;
    for (int n = n_lo; n <= n_hi; ++n)
        if (!(a[n] > 0.0)) return false;
    return true;
}

// smallest c with x <= c y (0 <= 0 allowed)
double needed(double x, double y) {
    if (x <= 0.0) return 0.0;
    if (y <= 0.0) return kInf;
    return x / y;
}

} // namespace

double loglog_slope(const std::vector<double>& a, int n_lo, int n_hi) {
    check_window(a.size(), n_lo, n_hi);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const int m = n_hi - n_lo + 1;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (!(a[n] > 0.0)) throw DomainError("log-log fit needs positive entries");
        const double x = std::log(double(n)), y = std::log(a[n]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

DecayReport compare_decay(const std::vector<double>& a, const std::vector<double>& b, int n_lo, int n_hi) {
    check_window(std::min(a.size(), b.size()), n_lo, n_hi);
    DecayReport r;
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.exponent_a = loglog_slope(a, n_lo, n_hi);
    r.exponent_b = loglog_slope(b, n_lo, n_hi);
    double log_mean = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) log_mean += std::log(a[n] / b[n]);
    const double c = std::exp(log_mean / (n_hi - n_lo + 1));
    r.ratio_min = kInf;
    r.ratio_max = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double q = a[n] / (c * b[n]);
        r.ratio_min = std::min(r.ratio_min, q);
        r.ratio_max = std::max(r.ratio_max, q);
    }
    return r;
}

DecayEquivalenceReport decay_equivalence_report(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                                   int N, const DecayEquivalenceOptions& options) {
    if (!(options.kappa > 0.0)) throw DomainError("kappa must be positive");
    DecayEquivalenceReport rep;
    rep.spectrum = spectrum(make_gram_spec(model, f, N));
    const IdaProfile profile = ida_profile(f, model, lat, delta, options.ida);
    const WeightedSamples samples{profile.G, profile.measure};
    rep.g_star = rearrangement(samples);
    rep.g_support_measure = distribution(samples, 1e-8);
    for (int n = 0; n < N; ++n) rep.g_star_samples.push_back(rep.g_star.evaluate(options.kappa * n));
    const double s_max = rep.spectrum.s.empty() ? 0.0 : rep.spectrum.s.front();
    const double g_max = rep.g_star.values.empty() ? 0.0 : rep.g_star.values.front();
    rep.degenerate = s_max <= 1e-14 && g_max <= 1e-14;
    const bool s_ok = positive_on(rep.spectrum.s, options.n_lo, options.n_hi);
    if (s_ok) rep.exponent_s = loglog_slope(rep.spectrum.s, options.n_lo, options.n_hi);
    if (s_ok && positive_on(rep.g_star_samples, options.n_lo, options.n_hi)) {
        rep.decay = compare_decay(rep.spectrum.s, rep.g_star_samples, options.n_lo, options.n_hi);
        rep.compared = true;
    }
    return rep;
}

double bda_estimate(const IdaProfile& profile) {
    if (profile.size() == 0) throw DomainError("empty IDA profile");
    return *std::max_element(profile.G.begin(), profile.G.end());
}

VdaReport vda_estimate(const IdaProfile& profile, double extent) {
    if (profile.size() == 0) throw DomainError("empty IDA profile");
    VdaReport rep;
    for (double frac : rep.fractions) {
        double m = 0.0;
        for (std::size_t i = 0; i < profile.size(); ++i)
            if (std::abs(profile.points[i]) > frac * extent) m = std::max(m, profile.G[i]);
        rep.outer_max.push_back(m);
    }
    return rep;
}

BlochReport bloch_compare(const Symbol& phi, const WeightModel& model, const Lattice& lat, double delta,
                          const IdaOptions& options) {
    if (!phi.is_holomorphic()) throw DomainError("bloch_compare needs a holomorphic symbol with a derivative");
    const Symbol conj_phi = conjugate(phi);
    const IdaProfile profile = ida_profile(conj_phi, model, lat, delta, options);
    BlochReport rep;
    WeightedSamples g_samples{profile.G, profile.measure};
    WeightedSamples d_samples;
    d_samples.measures = profile.measure;
    rep.pointwise_ratio_min = kInf;
    constexpr int kRim = 64;
    bool any = false;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const Point z = profile.points[i];
        const double t = profile.tau[i];
        const double r = delta * t;
        d_samples.values.push_back(t * std::abs(phi.derivative(z)));
        double sup = 0.0;
        for (const Point& u : options.rule.nodes) sup = std::max(sup, std::abs(phi.derivative(z + r * u)));
        for (int k = 0; k < kRim; ++k)
            sup = std::max(sup, std::abs(phi.derivative(z + std::polar(r, 2.0 * std::numbers::pi * k / kRim))));
        if (sup <= 0.0) continue;
        any = true;
        const double q = profile.G[i] / (t * sup);
        rep.pointwise_ratio_min = std::min(rep.pointwise_ratio_min, q);
        rep.pointwise_ratio_max = std::max(rep.pointwise_ratio_max, q);
    }
    if (!any) {
        rep.degenerate = true;
        rep.pointwise_ratio_min = 0.0;
        return rep;
    }
    const RearrangementCurve gc = rearrangement(g_samples);
    const RearrangementCurve dc = rearrangement(d_samples);
    const double cap = 0.8 * std::min(gc.total_measure, dc.total_measure);
    rep.t_hi = std::min(rep.t_hi, cap);
    if (rep.t_hi <= rep.t_lo) throw DomainError("bloch_compare: lattice captures too little measure");
    std::vector<double> ratios;
    for (double t : log_grid(rep.t_lo, rep.t_hi, 50)) {
        const double a = gc.evaluate(t), b = dc.evaluate(t);
        if (a > 0.0 && b > 0.0) ratios.push_back(a / b);
    }
    if (ratios.empty()) {
        rep.degenerate = true;
        return rep;
    }
    double lm = 0.0;
    for (double q : ratios) lm += std::log(q);
    const double c = std::exp(lm / double(ratios.size()));
    rep.ratio_min = kInf;
    for (double q : ratios) {
        rep.ratio_min = std::min(rep.ratio_min, q / c);
        rep.ratio_max = std::max(rep.ratio_max, q / c);
    }
    return rep;
}

BergerCoburnReport berger_coburn(const Symbol& f, const WeightModel& model, int N, double p, const Lattice& lat,
                                 const IdaOptions& options) {
    if (!f.bounded) throw DomainError("berger_coburn needs a symbol with a declared bound");
    if (!(p > 1.0)) throw DomainError("berger_coburn needs p > 1");
    const Symbol g = conjugate(f);
    BergerCoburnReport rep;
    rep.weak_f = schatten(spectrum(make_gram_spec(model, f, N)), p).sp_weak;
    rep.weak_conj = schatten(spectrum(make_gram_spec(model, g, N)), p).sp_weak;
    const double scale = std::max({1e-300, rep.weak_f, rep.weak_conj});
    rep.degenerate = rep.weak_f <= 1e-14 * std::max(1.0, scale) || rep.weak_conj <= 1e-14 * std::max(1.0, scale);
    rep.ratio = rep.weak_conj > 0.0 ? rep.weak_f / rep.weak_conj : std::numeric_limits<double>::quiet_NaN();
    WeightedSamples mf, mg;
    for (std::size_t n = 0; n < lat.size(); ++n) {
        const double r = lat.delta * tau(model, lat.centers[n]);
        mf.values.push_back(mo(f, lat.centers[n], r, options.rule));
        mg.values.push_back(mo(g, lat.centers[n], r, options.rule));
        mf.measures.push_back(lat.cell_measure[n]);
        mg.measures.push_back(lat.cell_measure[n]);
    }
    rep.mo_weak_f = weak_lp(mf, p);
    rep.mo_weak_conj = weak_lp(mg, p);
    return rep;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi >= lo) || n < 1) throw DomainError("log_grid needs 0 < lo <= hi and n >= 1");
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo * std::pow(hi / lo, double(i) / (n - 1)));
    if (n > 1) out.back() = hi;
    return out;
}

ConvexTraceReport convex_trace_comparison(const SpectrumResult& spectrum, const IdaProfile& profile,
                                 const std::vector<double>& thetas) {
    if (thetas.empty()) throw DomainError("convex trace comparison needs at least one theta");
    ConvexTraceReport rep;
    rep.thetas = thetas;
    auto rhs = [&](double theta, double b) {
        double acc = 0.0;
        for (std::size_t i = 0; i < profile.size(); ++i) acc += std::max(0.0, profile.G[i] * b - theta) * profile.measure[i];
        return acc;
    };
    for (double th : thetas) rep.lhs.push_back(convex_trace(spectrum, th));

    std::vector<double> grid;
    for (int i = 0; i <= 30; ++i) grid.push_back(1.0 + 0.5 * i);
    double best = kInf;
    for (double b : grid) {
        double c_need = 1.0;
        std::vector<double> up, low;
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            up.push_back(rhs(thetas[i], b));
            low.push_back(rhs(thetas[i], 1.0 / b));
            c_need = std::max({c_need, needed(rep.lhs[i], up.back()), needed(low.back(), rep.lhs[i])});
        }
        const auto it = std::find_if(grid.begin(), grid.end(), [&](double c) { return c >= c_need * (1.0 - 1e-12); });
        if (it == grid.end()) continue;
        const double score = std::max(b, *it);
        if (score < best) {
            best = score;
            rep.B = b;
            rep.C = *it;
            rep.rhs_upper = up;
            rep.rhs_lower = low;
            rep.passed = true;
        }
    }
    if (!rep.passed) {
        for (double th : thetas) {
            rep.rhs_upper.push_back(rhs(th, grid.back()));
            rep.rhs_lower.push_back(rhs(th, 1.0 / grid.back()));
        }
    }
    return rep;
}

ConvexTraceReport convex_trace_check(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                                  int N, const std::vector<double>& thetas, const IdaOptions& options) {
    const SpectrumResult s = spectrum(make_gram_spec(model, f, N));
    const IdaProfile profile = ida_profile(f, model, lat, delta, options);
    return convex_trace_comparison(s, profile, thetas);
}

void write_report(std::ostream& os, const DecayReport& r) {
    os << "n_lo=" << r.n_lo << '\n'
       << "n_hi=" << r.n_hi << '\n'
       << "exponent_a=" << format_double(r.exponent_a) << '\n'
       << "exponent_b=" << format_double(r.exponent_b) << '\n'
       << "ratio_min=" << format_double(r.ratio_min) << '\n'
       << "ratio_max=" << format_double(r.ratio_max) << '\n'
       << "ratio_spread=" << format_double(r.spread()) << '\n';
}

void write_report(std::ostream& os, const ConvexTraceReport& r) {
    os << "passed=" << (r.passed ? "true" : "false") << '\n'
       << "B=" << format_double(r.B) << '\n'
       << "C=" << format_double(r.C) << '\n';
    for (std::size_t i = 0; i < r.thetas.size(); ++i)
        os << "theta_" << i << '=' << format_double(r.thetas[i]) << ",lhs=" << format_double(r.lhs[i])
           << ",rhs_upper=" << format_double(r.rhs_upper[i]) << ",rhs_lower=" << format_double(r.rhs_lower[i]) << '\n';
}

} // namespace hankel_lab
