#include "hankel_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "hankel_lab/asymptotics.hpp"
#include "hankel_lab/error.hpp"

namespace hankel_cli {

using namespace hankel_lab;

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

Check make(std::string name, bool ok, std::string detail) { return Check{std::move(name), ok, std::move(detail)}; }

// Halton points in a square of half-side `half` (Fock) or a disk of radius
// `half` (Bergman).
std::vector<Point> probe_points(const WeightModel& model, double half, int n, std::uint64_t seed) {
    std::vector<Point> out;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t idx = seed * 1000003ULL + std::uint64_t(i) + 1;
        const double u = radical_inverse(idx, 2), v = radical_inverse(idx, 3);
        if (model.is_fock())
            out.emplace_back((2.0 * u - 1.0) * half, (2.0 * v - 1.0) * half);
        else
            out.push_back(std::polar(half * std::sqrt(u), 2.0 * kPi * v));
    }
    return out;
}

} // namespace

std::vector<Check> quadrature_suite() {
    std::vector<Check> out;
    const DiskRule rule = disk_rule();
    {
        double sum = 0.0;
        for (double w : rule.weights) sum += w;
        out.push_back(make("disk weights sum to pi", std::abs(sum - kPi) <= 1e-13, "error " + fmt(std::abs(sum - kPi))));
    }
    {
        double worst = 0.0;
        for (int a = 0; a <= 12; ++a)
            for (int b = 0; b <= 12; ++b) {
                Complex acc = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                    acc += rule.weights[i] * std::pow(rule.nodes[i], a) * std::pow(std::conj(rule.nodes[i]), b);
                const double exact = a == b ? kPi / (a + 1) : 0.0;
                worst = std::max(worst, std::abs(acc - exact) / std::max(1.0, exact));
            }
        out.push_back(make("disk rule exact for u^a conj(u)^b, a,b <= 12", worst <= 1e-12, "max error " + fmt(worst)));
    }
    for (const WeightModel& model : {WeightModel::fock(1.0), WeightModel::fock(2.5), WeightModel::bergman(0.0),
                                     WeightModel::bergman(1.5), WeightModel::bergman(-0.5)}) {
        const GlobalRule g = global_rule(model);
        double worst = 0.0;
        for (int n = 0; n <= 40; ++n) {
            double acc = 0.0;
            for (std::size_t q = 0; q < g.nodes.size(); ++q) acc += g.weights[q] * std::pow(std::norm(g.nodes[q]), n);
            worst = std::max(worst, std::abs(acc / std::exp(log_norm_sq(model, n)) - 1.0));
        }
        Complex orth = 0.0;
        for (std::size_t q = 0; q < g.nodes.size(); ++q)
            orth += g.weights[q] * g.nodes[q] * std::conj(g.nodes[q]) * std::conj(g.nodes[q]);
        out.push_back(make("global rule reproduces ||z^n||^2, n <= 40, " + model.describe(), worst <= 1e-10,
                           "max relative error " + fmt(worst)));
        out.push_back(make("global rule angular orthogonality, " + model.describe(), std::abs(orth) <= 1e-13,
                           "|int z conj(z)^2| = " + fmt(std::abs(orth))));
    }
    {
        const DiskRule again = disk_rule();
        const GlobalRule g1 = global_rule(WeightModel::fock(1.0)), g2 = global_rule(WeightModel::fock(1.0));
        const bool same = again.nodes == rule.nodes && again.weights == rule.weights && g1.nodes == g2.nodes &&
                          g1.weights == g2.weights;
        out.push_back(make("rules are bit-identical across constructions", same, same ? "identical" : "differ"));
    }
    {
        const DiskRule fine = disk_rule(48, 128);
        double worst = 0.0;
        std::vector<std::string> names = catalog_names();
        names.push_back("2,3");
        for (const auto& name : names) {
            const Symbol f = catalog_symbol(name);
            for (auto [c, r] : {std::pair<Point, double>{Point(0.3, 0.2), 0.5}, {Point(0.9, -0.3), 0.5},
                                {Point(-1.5, 0.7), 1.2}}) {
                const Complex a = integrate_disk(f, c, r, rule), b = integrate_disk(f, c, r, fine);
                worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::abs(b)) * (std::abs(b) > 1e-12));
            }
        }
        out.push_back(make("doubling (n_r, n_t) moves integrate_disk by <= 1e-10 relative", worst <= 1e-10,
                           "max relative change " + fmt(worst)));
    }
    return out;
}

std::vector<Check> lattice_suite(std::uint64_t seed) {
    std::vector<Check> out;
    struct Config {
        WeightModel model;
        double delta;
        double extent;
    };
    std::vector<Config> configs;
    for (double d : {0.25, 0.5, 1.0}) configs.push_back({WeightModel::fock(1.0), d, 4.0});
    for (double d : {0.1, 0.2, 0.25}) configs.push_back({WeightModel::bergman(0.0), d, 0.95});
    configs.push_back({WeightModel::bergman(1.0), 0.2, 0.95});
    for (const Config& c : configs) {
        const Lattice lat = build_lattice(c.model, c.delta, c.extent);
        const LatticeReport rep = verify_lattice(lat, 4000, seed);
        const std::string tag = c.model.describe() + " delta=" + fmt(c.delta);
        out.push_back(make("covering " + tag, rep.covered, std::to_string(rep.uncovered) + " uncovered probes"));
        out.push_back(make("separation " + tag, rep.min_gap_ratio > 1.0, "min gap ratio " + fmt(rep.min_gap_ratio)));
        out.push_back(make("multiplicity <= 8 " + tag, rep.multiplicity_max <= 8,
                           "max multiplicity " + std::to_string(rep.multiplicity_max)));
        double region;
        if (c.model.is_fock()) {
            const double side = lat.grid.nx * lat.grid.h;
            region = side * side * c.model.alpha() / kPi;
        } else {
            const double s = std::sinh(lat.rings.back().t_hi);
            region = (c.model.alpha() + 1.0) * s * s;
        }
        const double err = std::abs(lat.total_measure() / region - 1.0);
        out.push_back(make("cell measures sum to lambda(region) " + tag, err <= 0.02, "relative error " + fmt(err)));

        double worst_sum = 0.0;
        bool support_ok = true;
        double dbar_max = 0.0, dbar_sum_max = 0.0;
        const double half = c.model.is_fock() ? 0.5 * c.extent : 0.8 * c.extent;
        int i = 0;
        for (const Point& z : probe_points(c.model, half, 1000, seed)) {
            const PartitionWeights pw = partition_of_unity(lat, z);
            double s = 0.0;
            for (std::size_t k = 0; k < pw.indices.size(); ++k) {
                s += pw.weights[k];
                if (std::abs(z - lat.centers[pw.indices[k]]) >= 2.0 * lat.radii[pw.indices[k]]) support_ok = false;
            }
            worst_sum = std::max(worst_sum, std::abs(s - 1.0));
            if (i++ % 4 == 0) {
                const double t = tau(c.model, z);
                const double step = 1e-5 * t;
                Complex total = 0.0;
                for (std::size_t n : lattice_neighbors(lat, z, 2.2)) {
                    const Complex d = dbar_partition(lat, n, z, step);
                    total += d;
                    dbar_max = std::max(dbar_max, t * std::abs(d));
                }
                dbar_sum_max = std::max(dbar_sum_max, t * std::abs(total));
            }
        }
        out.push_back(make("partition sums to 1 " + tag, worst_sum <= 1e-12, "max |sum - 1| " + fmt(worst_sum)));
        out.push_back(make("partition support within 2 radii " + tag, support_ok, support_ok ? "ok" : "violated"));
        out.push_back(make("tau |dbar psi_n| <= 10 " + tag, dbar_max <= 10.0, "max " + fmt(dbar_max)));
        out.push_back(make("sum_n dbar psi_n = 0 " + tag, dbar_sum_max <= 1e-6, "max tau |sum| " + fmt(dbar_sum_max)));
    }
    {
        const Lattice lat = build_lattice(WeightModel::fock(1.0), 0.5, 4.0);
        const LatticeReport rep = verify_lattice(with_radius_factor(lat, 0.60), 4000, seed);
        out.push_back(make("radius 0.60 h leaves gaps", !rep.covered,
                           std::to_string(rep.uncovered) + " uncovered probes"));
    }
    return out;
}

AntiholomorphicResult antiholomorphic_identity(double delta, int degree, int probes_per_space) {
    AntiholomorphicResult res;
    const DiskRule rule = disk_rule();
    for (const WeightModel& model : {WeightModel::fock(1.0), WeightModel::bergman(0.0)}) {
        const double half = model.is_fock() ? 3.0 : 0.35;
        for (const Point& z : probe_points(model, half, probes_per_space, 7)) {
            const double r = delta * tau(model, z);
            for (int k = 1; k <= 3; ++k) {
                const Symbol phi = monomial_symbol(k, 0);
                const double g = best_holomorphic_distance(conjugate(phi), z, r, degree, rule).value;
                res.max_error = std::max(res.max_error, std::abs(g - mo(phi, z, r, rule)));
            }
            ++res.probes;
        }
    }
    return res;
}

ConjugatePairResult conjugate_pair_bound() {
    ConjugatePairResult res;
    res.min_ratio = std::numeric_limits<double>::infinity();
    res.max_g_minus_mo = -std::numeric_limits<double>::infinity();
    const DiskRule rule = disk_rule();
    std::vector<std::string> names = catalog_names();
    names.push_back("2,1");
    struct Config {
        WeightModel model;
        double delta;
        double extent;
    };
    for (const Config& c : {Config{WeightModel::fock(1.0), 0.5, 3.0}, Config{WeightModel::bergman(0.0), 0.2, 0.8}}) {
        const Lattice lat = build_lattice(c.model, c.delta, c.extent);
        for (const auto& name : names) {
            const Symbol f = catalog_symbol(name);
            const Symbol g = conjugate(f);
            for (std::size_t n = 0; n < lat.size(); n += c.model.is_fock() ? 1 : 3) {
                const Point z = lat.centers[n];
                const double r = c.delta * tau(c.model, z);
                const double m = mo(f, z, r, rule);
                const double gf = best_holomorphic_distance(f, z, r, kDefaultIdaDegree, rule).value;
                res.max_g_minus_mo = std::max(res.max_g_minus_mo, gf - m);
                if (m <= 1e-10 * m_avg(f, z, r, rule)) {
                    ++res.skipped;
                    continue;
                }
                const double gg = best_holomorphic_distance(g, z, r, kDefaultIdaDegree, rule).value;
                const double q = (gf + gg) / m;
                res.max_ratio = std::max(res.max_ratio, q);
                res.min_ratio = std::min(res.min_ratio, q);
                ++res.probes;
            }
        }
    }
    return res;
}

std::vector<Check> lemmas_suite() {
    std::vector<Check> out;
    const AntiholomorphicResult a = antiholomorphic_identity();
    out.push_back(make("G(conj phi) = MO(phi), phi in {w, w^2, w^3}, delta 0.4", a.max_error <= 1e-8,
                       "max error " + fmt(a.max_error) + " over " + std::to_string(a.probes) + " probes"));
    const ConjugatePairResult c = conjugate_pair_bound();
    out.push_back(make("(G(f) + G(conj f)) / MO(f) <= 2", c.max_ratio <= 2.0 + 1e-9,
                       "max " + fmt(c.max_ratio) + " over " + std::to_string(c.probes) + " probes"));
    out.push_back(make("(G(f) + G(conj f)) / MO(f) >= 0.1", c.min_ratio >= 0.1, "min " + fmt(c.min_ratio)));
    out.push_back(make("G <= MO + 1e-10", c.max_g_minus_mo <= 1e-10, "max G - MO " + fmt(c.max_g_minus_mo)));

    const WeightModel fock = WeightModel::fock(1.0);
    const Lattice lat = build_lattice(fock, 0.5, 6.0);
    const Decomposition d = decompose(catalog_symbol("conj_z"), fock, lat, 0.5);
    out.push_back(make("decomposition of conj(z): tau |dbar f1| / G_{4 delta} <= 10", d.report.max_ratio_dbar <= 10.0,
                       "max " + fmt(d.report.max_ratio_dbar) + ", M(f2)/G " + fmt(d.report.max_ratio_m_f2) + ", " +
                           std::to_string(d.report.probes_used) + " probes"));
    const Decomposition h = decompose(catalog_symbol("holo_z_sq"), fock, lat, 0.5);
    out.push_back(make("decomposition of a holomorphic symbol has f2 = 0", h.report.max_abs_f2 <= 1e-8,
                       "sup |f2| " + fmt(h.report.max_abs_f2)));
    return out;
}

std::vector<Check> rearrange_suite(std::uint64_t seed) {
    std::vector<Check> out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, 10), val(0, 6), mes(1, 16);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int mismatches = 0;
    double equi = 0.0;
    bool chebyshev = true, zero_invariant = true;
    for (int trial = 0; trial < 1000; ++trial) {
        WeightedSamples s;
        const int n = len(rng);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            s.values.push_back(val(rng) / 4.0);
            s.measures.push_back(mes(rng) / 8.0);
            total += s.measures.back();
        }
        const RearrangementCurve curve = rearrangement(s);
        std::vector<double> candidates{0.0};
        candidates.insert(candidates.end(), s.values.begin(), s.values.end());
        for (int q = 0; q < 20; ++q) {
            const double t = unit(rng) * (total + 1.0);
            double best = std::numeric_limits<double>::infinity();
            for (double c : candidates)
                if (distribution(s, c) <= t) best = std::min(best, c);
            if (curve.evaluate(t) != best) ++mismatches;
        }
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            const double a = lp_norm(s, p), b = lp_norm(curve, p);
            equi = std::max(equi, std::abs(a - b) / std::max(1e-300, a) * (a > 0.0));
        }
        for (double p : {1.0, 2.0})
            if (weak_lp(curve, p) > lp_norm(s, p) * (1.0 + 1e-12)) chebyshev = false;
        WeightedSamples z = s;
        z.values.insert(z.values.begin() + trial % (n + 1), 0.0);
        z.measures.insert(z.measures.begin() + trial % (n + 1), 0.375);
        const RearrangementCurve cz = rearrangement(z);
        if (cz.breakpoints != curve.breakpoints || cz.values != curve.values || weak_lp(cz, 1.0) != weak_lp(curve, 1.0) ||
            lp_norm(z, 2.0) != lp_norm(s, 2.0))
            zero_invariant = false;
    }
    out.push_back(make("sorted rearrangement equals the inf definition (1000 instances)", mismatches == 0,
                       std::to_string(mismatches) + " mismatches"));
    out.push_back(make("lp_norm of samples equals lp_norm of the curve", equi <= 1e-12, "max relative gap " + fmt(equi)));
    out.push_back(make("weak_lp <= lp_norm for p in {1, 2}", chebyshev, chebyshev ? "ok" : "violated"));
    out.push_back(make("zero-valued samples change nothing", zero_invariant, zero_invariant ? "ok" : "changed"));
    const ClosedFormReport cf = rearrangement_closed_form_check(WeightModel::bergman(0.0));
    out.push_back(make("tau rearrangement within 2% of sqrt(pi)/(1+t) on [0.5, 100]", cf.max_relative_error <= 0.02,
                       "max relative error " + fmt(cf.max_relative_error)));
    out.push_back(make("weak-L1 norm of tau within 5% of sqrt(pi)", cf.weak_l1_relative_error <= 0.05,
                       "weak-L1 " + fmt(cf.weak_l1) + ", relative error " + fmt(cf.weak_l1_relative_error)));
    return out;
}

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "quadrature") return quadrature_suite();
    if (name == "lattice") return lattice_suite(seed);
    if (name == "lemmas") return lemmas_suite();
    if (name == "rearrange") return rearrange_suite(seed);
    throw ConfigError("unknown suite '" + name + "' (quadrature, lattice, lemmas, rearrange)");
}

bool print_checks(std::ostream& os, const std::vector<Check>& checks) {
    bool all = true;
    for (const Check& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        all = all && c.passed;
    }
    return all;
}

} // namespace hankel_cli
