#include "hankel_lab/ida.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"
#include "hankel_lab/parallel.hpp"

namespace hankel_lab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kLookahead = 6;

struct DiskSamples {
    DiskNodes nodes;
    std::vector<Complex> values;
    double total_weight = 0.0;
};

DiskSamples sample_disk(const Symbol& f, Point center, double radius, const DiskRule& rule) {
    DiskSamples d;
    d.nodes = disk_nodes(rule, center, radius, f.jump_radius);
    d.values.resize(d.nodes.u.size());
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        d.values[i] = f(center + radius * d.nodes.u[i]);
        d.total_weight += d.nodes.weights[i];
    }
    return d;
}

Complex mean_of(const DiskSamples& d) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < d.values.size(); ++i) s += d.nodes.weights[i] * d.values[i];
    return s / d.total_weight;
}

double mean_sq(const DiskNodes& nodes, const std::vector<Complex>& v, double total) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += nodes.weights[i] * std::norm(v[i]);
    return s / total;
}

HolomorphicFit fit_samples(const DiskSamples& d, Point center, double radius, int max_degree, double tol) {
    if (max_degree < 0) throw DomainError("max_degree must be >= 0");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    HolomorphicFit fit;
    fit.center = center;
    fit.radius = radius;
    const std::size_t n = d.values.size();
    std::vector<Complex> residual = d.values;
    std::vector<Complex> power(n, Complex(1.0));
    const double m_f = std::sqrt(mean_sq(d.nodes, d.values, d.total_weight));
    double value = m_f;
    int quiet = 0;
    for (int k = 0; k <= max_degree; ++k) {
        if (k > 0)
            for (std::size_t i = 0; i < n; ++i) power[i] *= d.nodes.u[i];
        Complex num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += d.nodes.weights[i] * residual[i] * std::conj(power[i]);
            den += d.nodes.weights[i] * std::norm(power[i]);
        }
        const Complex c = num / den;
        for (std::size_t i = 0; i < n; ++i) residual[i] -= c * power[i];
        fit.coeffs.push_back(c);
        fit.degree_used = k;
        const double next = std::sqrt(mean_sq(d.nodes, residual, d.total_weight));
        const double drop = value - next;
        value = next;
        if (value <= tol * m_f) break;
        quiet = drop < tol * value ? quiet + 1 : 0;
        if (k > 0 && quiet >= kLookahead) break;
    }
    fit.value = value;
    return fit;
}

void require_radius(double radius) {
    if (!(radius > 0.0)) throw DomainError("disk radius must be positive");
}

} // namespace

Complex HolomorphicFit::evaluate(Point w) const {
    const Complex u = (w - center) / radius;
    Complex acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * u + coeffs[k];
    return acc;
}

HolomorphicFit best_holomorphic_distance(const Symbol& f, Point center, double radius, int max_degree,
                                         const DiskRule& rule, double tol) {
    require_radius(radius);
    return fit_samples(sample_disk(f, center, radius, rule), center, radius, max_degree, tol);
}

double mo(const Symbol& f, Point center, double radius, const DiskRule& rule) {
    require_radius(radius);
    DiskSamples d = sample_disk(f, center, radius, rule);
    const Complex m = mean_of(d);
    for (auto& v : d.values) v -= m;
    return std::sqrt(mean_sq(d.nodes, d.values, d.total_weight));
}

Complex hat_avg(const Symbol& f, Point center, double radius, const DiskRule& rule) {
    require_radius(radius);
    return mean_of(sample_disk(f, center, radius, rule));
}

double m_avg(const Symbol& f, Point center, double radius, const DiskRule& rule) {
    require_radius(radius);
    const DiskSamples d = sample_disk(f, center, radius, rule);
    return std::sqrt(mean_sq(d.nodes, d.values, d.total_weight));
}

IdaProfile ida_profile(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                       const IdaOptions& options) {
    if (!(lat.model == model)) throw DomainError("ida_profile: lattice built for a different model");
    if (std::abs(delta - lat.delta) > 1e-12 * std::max(1.0, delta))
        throw DomainError("ida_profile: delta does not match the lattice");
    const auto samples = sampling_points(lat, options.refine);
    IdaProfile p;
    p.model = model;
    p.delta = delta;
    const std::size_t n = samples.size();
    p.points.resize(n);
    p.tau.resize(n);
    p.measure.resize(n);
    p.cell.resize(n);
    p.G.resize(n);
    p.MO.resize(n);
    p.hat.resize(n);
    p.degree_used.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point z = samples[i].z;
        const double t = tau(model, z);
        if (!model.is_fock() && std::abs(z) + delta * t >= 1.0)
            throw DomainError("ida_profile: disk D(z, delta tau(z)) leaves the unit disk; reduce delta or extent");
        p.points[i] = z;
        p.tau[i] = t;
        p.measure[i] = samples[i].measure;
        p.cell[i] = samples[i].cell;
    }
    parallel_for(n, [&](std::size_t i) {
        const double radius = delta * p.tau[i];
        DiskSamples d = sample_disk(f, p.points[i], radius, options.rule);
        const HolomorphicFit fit = fit_samples(d, p.points[i], radius, options.max_degree, options.tol);
        p.G[i] = fit.value;
        p.degree_used[i] = fit.degree_used;
        p.hat[i] = fit.coeffs.front();
        // the degree-0 coefficient is the disk mean, so MO is the degree-0 residual
        for (auto& v : d.values) v -= p.hat[i];
        p.MO[i] = std::sqrt(mean_sq(d.nodes, d.values, d.total_weight));
    });
    return p;
}

void write_profile_csv(std::ostream& os, const IdaProfile& p) {
    os << "index,re,im,tau,cell_measure,G,MO,hat_re,hat_im,degree_used\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << i << ',' << format_double(p.points[i].real()) << ',' << format_double(p.points[i].imag()) << ','
           << format_double(p.tau[i]) << ',' << format_double(p.measure[i]) << ',' << format_double(p.G[i]) << ','
           << format_double(p.MO[i]) << ',' << format_double(p.hat[i].real()) << ','
           << format_double(p.hat[i].imag()) << ',' << p.degree_used[i] << '\n';
}

namespace {

struct PiecewiseFit {
    Lattice lat;
    std::vector<HolomorphicFit> fits;

    Complex operator()(Point z) const {
        if (!lat.model.contains(z)) return 0.0;
        std::vector<std::size_t> idx;
        std::vector<double> g;
        double sum = 0.0;
        bool covered = false;
        for (std::size_t n : lattice_neighbors(lat, z, 2.0)) {
            const double x = std::abs(z - lat.centers[n]) / lat.radii[n];
            const double v = smoothstep_profile(x);
            covered = covered || x <= 1.0;
            if (v > 0.0) {
                idx.push_back(n);
                g.push_back(v);
                sum += v;
            }
        }
        if (!covered) return 0.0;
        Complex acc = 0.0;
        for (std::size_t i = 0; i < idx.size(); ++i) acc += (g[i] / sum) * fits[idx[i]].evaluate(z);
        return acc;
    }

    bool covered(Point z) const {
        if (!lat.model.contains(z)) return false;
        return !lattice_neighbors(lat, z, 1.0).empty();
    }
};

double ratio(double num, double g) {
    if (g > 1e-12) return num / g;
    return num <= 1e-8 ? 0.0 : std::numeric_limits<double>::infinity();
}

} // namespace

Decomposition decompose(const Symbol& f, const WeightModel& model, const Lattice& lat, double delta,
                        const DecomposeOptions& options) {
    if (!(lat.model == model)) throw DomainError("decompose: lattice built for a different model");
    if (std::abs(delta - lat.delta) > 1e-12 * std::max(1.0, delta))
        throw DomainError("decompose: delta does not match the lattice");
    auto pw = std::make_shared<PiecewiseFit>();
    pw->lat = lat;
    pw->fits.resize(lat.size());
    parallel_for(lat.size(), [&](std::size_t n) {
        const Point c = lat.centers[n];
        const double r = delta * tau(model, c);
        pw->fits[n] = best_holomorphic_distance(f, c, r, options.ida.max_degree, options.ida.rule, options.ida.tol);
    });

    Decomposition out;
    out.f1.name = "f1(" + f.name + ")";
    out.f1.eval = [pw](Point z) { return (*pw)(z); };
    auto fe = f.eval;
    out.f2.name = "f2(" + f.name + ")";
    out.f2.eval = [pw, fe](Point z) { return fe(z) - (*pw)(z); };

    DecompositionReport& rep = out.report;
    const double B = rep.B;
        auto dbar_f1 = [&](Point z) {
        const double h = 1e-4 * tau(model, z);
        const Complex dx = ((*pw)(z + h) - (*pw)(z - h)) / (2.0 * h);
        const Complex dy = ((*pw)(z + Complex(0.0, h)) - (*pw)(z - Complex(0.0, h))) / (2.0 * h);
        return 0.5 * (dx + Complex(0.0, 1.0) * dy);
    };

    const double half = 0.5 * lat.extent;
    for (int p = 0; p < options.n_probe; ++p) {
        const std::uint64_t idx = options.seed * std::uint64_t(options.n_probe) + std::uint64_t(p) + 1;
        const double u = radical_inverse(idx, 2), v = radical_inverse(idx, 3);
        const Point z = model.is_fock() ? Point((2.0 * u - 1.0) * half, (2.0 * v - 1.0) * half)
                                        : std::polar(half * std::sqrt(u), 2.0 * kPi * v);
        const double t = tau(model, z);
        const double r = delta * t;
        const double r_big = B * B * delta * t;
        if (!model.is_fock() && std::abs(z) + r_big >= 1.0) {
            ++rep.probes_skipped;
            continue;
        }
        const DiskNodes nodes = disk_nodes(options.probe_rule, z, r, std::nullopt);
        bool ok = true;
        for (const Point& uu : nodes.u)
            if (!pw->covered(z + r * uu)) {
                ok = false;
                break;
            }
        if (!ok) {
            ++rep.probes_skipped;
            continue;
        }
        const double g_big =
            best_holomorphic_distance(f, z, r_big, options.ida.max_degree, options.ida.rule, options.ida.tol).value;
        double total = 0.0, sum_dbar = 0.0, sum_f2 = 0.0;
        for (std::size_t i = 0; i < nodes.u.size(); ++i) {
            const Point w = z + r * nodes.u[i];
            const double d = tau(model, w) * std::abs(dbar_f1(w));
            const double f2 = std::abs(fe(w) - (*pw)(w));
            total += nodes.weights[i];
            sum_dbar += nodes.weights[i] * d * d;
            sum_f2 += nodes.weights[i] * f2 * f2;
            rep.max_abs_dbar = std::max(rep.max_abs_dbar, d);
            rep.max_abs_f2 = std::max(rep.max_abs_f2, f2);
        }
        const double point_dbar = t * std::abs(dbar_f1(z));
        rep.max_ratio_dbar = std::max(rep.max_ratio_dbar, ratio(point_dbar, g_big));
        rep.max_ratio_m_dbar = std::max(rep.max_ratio_m_dbar, ratio(std::sqrt(sum_dbar / total), g_big));
        rep.max_ratio_m_f2 = std::max(rep.max_ratio_m_f2, ratio(std::sqrt(sum_f2 / total), g_big));
        ++rep.probes_used;
    }
    return out;
}

} // namespace hankel_lab
