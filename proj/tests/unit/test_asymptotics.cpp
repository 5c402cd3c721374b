#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hankel_lab/asymptotics.hpp"
#include "hankel_lab/error.hpp"

using namespace hankel_lab;
using doctest::Approx;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
const WeightModel kFock = WeightModel::fock(1.0);
const WeightModel kBergman = WeightModel::bergman(0.0);

// Least-squares slope written out independently of the library.
double ls_slope(const std::vector<double>& a, int lo, int hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int m = hi - lo + 1;
    for (int n = lo; n <= hi; ++n) {
        const double x = std::log(double(n)), y = std::log(a[n]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<double> anchor(int len) {
    std::vector<double> a;
    for (int n = 0; n < len; ++n) a.push_back(1.0 / std::sqrt((n + 1.0) * (n + 2.0)));
    return a;
}
} // namespace

TEST_CASE("loglog slope") {
    std::vector<double> p;
    for (int n = 0; n < 60; ++n) p.push_back(n == 0 ? 1.0 : 3.0 * std::pow(n, -1.7));
    CHECK(loglog_slope(p, 5, 50) == Approx(-1.7).epsilon(1e-13));
    const auto a = anchor(64);
    CHECK(loglog_slope(a, 5, 50) == Approx(ls_slope(a, 5, 50)).epsilon(1e-13));
    // frozen from the least-squares oracle above
    CHECK(loglog_slope(a, 5, 50) == Approx(-0.916918).epsilon(1e-5));
    CHECK_THROWS_AS(loglog_slope(a, 0, 10), DomainError);
    CHECK_THROWS_AS(loglog_slope(a, 10, 10), DomainError);
    CHECK_THROWS_AS(loglog_slope(a, 5, 64), DomainError);
    std::vector<double> z(20, 0.0);
    CHECK_THROWS_AS(loglog_slope(z, 5, 10), DomainError);
}

TEST_CASE("compare_decay examples") {
    const auto a = anchor(64);
    std::vector<double> b, inv, inv2;
    for (int n = 0; n < 64; ++n) {
        b.push_back(kSqrtPi / (1.0 + n));
        inv.push_back(n == 0 ? 1.0 : 1.0 / n);
        inv2.push_back(n == 0 ? 1.0 : 1.0 / (double(n) * n));
    }
    const DecayReport r = compare_decay(a, b, 5, 50);
    CHECK(r.exponent_a == Approx(ls_slope(a, 5, 50)).epsilon(1e-12));
    CHECK(r.exponent_b == Approx(-1.0).epsilon(0.03));
    CHECK(r.spread() <= 1.5);
    const DecayReport same = compare_decay(a, a, 5, 50);
    CHECK(same.exponent_a == same.exponent_b);
    CHECK(same.ratio_min == Approx(1.0).epsilon(1e-14));
    CHECK(same.ratio_max == Approx(1.0).epsilon(1e-14));
    const DecayReport gap = compare_decay(inv, inv2, 5, 50);
    CHECK(gap.exponent_a - gap.exponent_b == Approx(1.0).epsilon(1e-12));
    CHECK(gap.spread() == Approx(10.0).epsilon(1e-12));
    std::ostringstream os;
    write_report(os, r);
    for (const char* key : {"ratio_min=", "ratio_max=", "exponent_a=", "exponent_b="})
        CHECK(os.str().find(key) != std::string::npos);
}

TEST_CASE("decay equivalence report: constant symbol is degenerate") {
    const Lattice lat = build_lattice(kBergman, 0.2, 0.9);
    const DecayEquivalenceReport r = decay_equivalence_report(catalog_symbol("const_1"), kBergman, lat, 0.2, 16);
    CHECK(r.degenerate);
    for (double s : r.spectrum.s) CHECK(s == 0.0);
}

TEST_CASE("decay equivalence report: jump symbol") {
    const Lattice lat = build_lattice(kFock, 0.5, 6.0);
    DecayEquivalenceOptions o;
    o.n_lo = 8;
    o.n_hi = 32;
    const DecayEquivalenceReport r = decay_equivalence_report(catalog_symbol("inv_z_outside"), kFock, lat, 0.5, 64, o);
    CHECK(r.exponent_s <= -2.0);
    CHECK(r.g_support_measure <= 40.0);
    CHECK(r.g_star.evaluate(r.g_support_measure + 1e-9) <= 1e-8);
    CHECK(r.g_star_samples.size() == 64);
}

TEST_CASE("bda and vda estimates") {
    const Lattice lat = build_lattice(kFock, 0.4, 4.0);
    const IdaProfile p = ida_profile(catalog_symbol("conj_z"), kFock, lat, 0.4);
    CHECK(bda_estimate(p) == Approx(0.4 * kSqrtPi / std::sqrt(2.0)).epsilon(1e-12));
    const VdaReport v = vda_estimate(p, 4.0);
    REQUIRE(v.outer_max.size() == 3);
    for (double m : v.outer_max) CHECK(m == Approx(bda_estimate(p)).epsilon(1e-12));
    CHECK(bda_estimate(ida_profile(catalog_symbol("holo_z_sq"), kFock, lat, 0.4)) <= 1e-9);
    const Lattice l5 = build_lattice(kFock, 0.5, 4.0);
    const IdaProfile j = ida_profile(catalog_symbol("inv_z_outside"), kFock, l5, 0.5);
    const VdaReport vj = vda_estimate(j, 4.0);
    CHECK(bda_estimate(j) > 0.01);
    CHECK(vj.outer_max[0] <= 1e-8);
    CHECK_THROWS_AS(bda_estimate(IdaProfile{}), DomainError);
}

TEST_CASE("bloch comparison") {
    const Lattice lat = build_lattice(kBergman, 0.2, 0.995);
    IdaOptions o;
    o.refine = {8, 1};
    const BlochReport r = bloch_compare(catalog_symbol("holo_z"), kBergman, lat, 0.2, o);
    CHECK(!r.degenerate);
    CHECK(r.spread() <= 3.0);
    const BlochReport c = bloch_compare(catalog_symbol("const_1"), kBergman, build_lattice(kBergman, 0.2, 0.9), 0.2);
    CHECK(c.degenerate);
    const BlochReport q = bloch_compare(catalog_symbol("holo_z_sq"), kFock, build_lattice(kFock, 0.5, 3.0), 0.5);
    CHECK(q.pointwise_ratio_max <= 1.0 + 1e-9);
    CHECK(q.pointwise_ratio_min > 0.0);
    CHECK_THROWS_AS(bloch_compare(catalog_symbol("conj_z"), kFock, build_lattice(kFock, 0.5, 3.0), 0.5), DomainError);
}

TEST_CASE("berger coburn") {
    const Lattice lat = build_lattice(kFock, 0.5, 4.0);
    const BergerCoburnReport mix = berger_coburn(catalog_symbol("bounded_mix"), kFock, 64, 2.0, lat);
    CHECK(!mix.degenerate);
    CHECK(mix.ratio >= 0.1);
    CHECK(mix.ratio <= 10.0);
    CHECK(mix.mo_weak_f == mix.mo_weak_conj);
    const BergerCoburnReport real = berger_coburn(catalog_symbol("radial_bump"), kFock, 32, 2.0, lat);
    CHECK(real.ratio == 1.0);
    Symbol z = catalog_symbol("holo_z");
    z.bounded = 1.0;
    const BergerCoburnReport holo = berger_coburn(z, kBergman, 16, 2.0, build_lattice(kBergman, 0.2, 0.9));
    CHECK(holo.degenerate);
    CHECK(holo.weak_f == 0.0);
    CHECK_THROWS_AS(berger_coburn(catalog_symbol("conj_z"), kFock, 8, 2.0, lat), DomainError);
    CHECK_THROWS_AS(berger_coburn(catalog_symbol("bounded_mix"), kFock, 8, 1.0, lat), DomainError);
}

TEST_CASE("log grid") {
    const auto g = log_grid(0.01, 1.0, 3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.01);
    CHECK(g[1] == Approx(0.1).epsilon(1e-14));
    CHECK(g[2] == 1.0);
    CHECK(log_grid(2.0, 5.0, 1) == std::vector<double>{2.0});
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 4), DomainError);
}

TEST_CASE("convex trace comparison") {
    const Lattice lat = build_lattice(kBergman, 0.2, 0.9);
    const ConvexTraceReport c =
        convex_trace_check(catalog_symbol("const_1"), kBergman, lat, 0.2, 16, log_grid(0.01, 1.0, 5));
    CHECK(c.passed);
    CHECK(c.B == 1.0);
    CHECK(c.C == 1.0);
    for (std::size_t i = 0; i < c.thetas.size(); ++i) {
        CHECK(c.lhs[i] == 0.0);
        CHECK(c.rhs_upper[i] == 0.0);
    }
    // theta above s_0 and above B max G: both sides vanish
    SpectrumResult s;
    s.s = {0.5, 0.25};
    IdaProfile p;
    p.G = {0.1, 0.05};
    p.measure = {1.0, 2.0};
    p.points = {0.0, 0.5};
    const ConvexTraceReport hi = convex_trace_comparison(s, p, {20.0});
    CHECK(hi.lhs[0] == 0.0);
    CHECK(hi.rhs_upper[0] == 0.0);
    CHECK(hi.passed);
    std::ostringstream os;
    write_report(os, hi);
    CHECK(os.str().find("passed=true") != std::string::npos);
    CHECK_THROWS_AS(convex_trace_comparison(s, p, {}), DomainError);
}
