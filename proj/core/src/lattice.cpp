#include "hankel_lab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"

namespace hankel_lab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCoverFactor = 0.75;
constexpr double kSepFactor = 0.45;

void check_delta(double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("lattice delta must lie in (0, 1]");
}

void push_center(Lattice& lat, Point c, double measure) {
    const double t = tau(lat.model, c);
    lat.centers.push_back(c);
    lat.radii.push_back(kCoverFactor * lat.delta * t);
    lat.sep_radii.push_back(kSepFactor * lat.delta * t);
    lat.cell_measure.push_back(measure);
}

Lattice fock_grid(const WeightModel& model, double delta, int i0, int i1, int j0, int j1, double extent) {
    Lattice lat;
    lat.model = model;
    lat.delta = delta;
    lat.extent = extent;
    const double h = delta * model.tau0();
    lat.grid = GridLayout{h, i0, j0, i1 - i0 + 1, j1 - j0 + 1};
    if (lat.grid.nx <= 0 || lat.grid.ny <= 0) throw DomainError("lattice is empty");
    const double cell = h * h * model.alpha() / kPi;
    for (int j = j0; j <= j1; ++j)
        for (int i = i0; i <= i1; ++i) push_center(lat, Point(i * h, j * h), cell);
    return lat;
}

// lambda measure of {tanh(t0) <= |z| < tanh(t1)} per unit of angle fraction
double band_measure(double alpha, double t0, double t1) {
    const double a = std::sinh(t0), b = std::sinh(t1);
    return (alpha + 1.0) * (b * b - a * a);
}

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

} // namespace

double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / double(base), f = inv, r = 0.0;
    while (i > 0) {
        r += f * double(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

double Lattice::total_measure() const {
    double s = 0.0;
    for (double m : cell_measure) s += m;
    return s;
}

Lattice build_lattice(const WeightModel& model, double delta, double extent) {
    check_delta(delta);
    if (!(extent > 0.0)) throw DomainError("lattice extent must be positive");
    if (model.is_fock()) {
        const double h = delta * model.tau0();
        const int k = std::max(0, int(std::ceil(extent / h - 1e-12)));
        return fock_grid(model, delta, -k, k, -k, k, extent);
    }
    if (extent >= 1.0) throw DomainError("Bergman lattice extent must be < 1");
    Lattice lat;
    lat.model = model;
    lat.delta = delta;
    lat.extent = extent;
    const double a = delta * model.tau0();
    for (int k = 0;; ++k) {
        RingLayout ring;
        ring.rho = std::tanh(k * a);
        ring.t_lo = k == 0 ? 0.0 : (k - 0.5) * a;
        ring.t_hi = (k + 0.5) * a;
        ring.count = k == 0 ? 1 : std::max(1, int(std::lround(2.0 * kPi * ring.rho / (delta * tau(model, ring.rho)))));
        ring.phase = (k % 2 == 1) ? kPi / ring.count : 0.0;
        ring.first = lat.centers.size();
        if (ring.rho >= 1.0) throw DomainError("lattice ring reached the unit circle");
        const double cell = band_measure(model.alpha(), ring.t_lo, ring.t_hi) / ring.count;
        for (int j = 0; j < ring.count; ++j)
            push_center(lat, k == 0 ? Point(0.0) : std::polar(ring.rho, ring.phase + 2.0 * kPi * j / ring.count),
                        cell);
        lat.rings.push_back(ring);
        if (ring.rho > extent) break;
    }
    return lat;
}

Lattice build_lattice_box(const WeightModel& model, double delta, Point lo, Point hi) {
    check_delta(delta);
    if (!model.is_fock()) throw DomainError("box lattices are Fock-only");
    const double h = delta * model.tau0();
    const int i0 = int(std::ceil(lo.real() / h - 1e-9)), i1 = int(std::floor(hi.real() / h + 1e-9));
    const int j0 = int(std::ceil(lo.imag() / h - 1e-9)), j1 = int(std::floor(hi.imag() / h + 1e-9));
    const double extent = std::max({std::abs(lo.real()), std::abs(lo.imag()), std::abs(hi.real()), std::abs(hi.imag())});
    return fock_grid(model, delta, i0, i1, j0, j1, extent);
}

Lattice with_radius_factor(const Lattice& lat, double factor) {
    Lattice out = lat;
    for (double& r : out.radii) r *= factor / kCoverFactor;
    return out;
}

std::vector<std::size_t> lattice_neighbors(const Lattice& lat, Point z, double factor) {
    std::vector<std::size_t> out;
    auto consider = [&](std::size_t n) {
        if (std::abs(z - lat.centers[n]) < factor * lat.radii[n]) out.push_back(n);
    };
    if (lat.model.is_fock()) {
        const GridLayout& g = lat.grid;
        const double rmax = *std::max_element(lat.radii.begin(), lat.radii.end());
        const int w = int(std::ceil(factor * rmax / g.h)) + 1;
        const int ci = int(std::lround(z.real() / g.h)), cj = int(std::lround(z.imag() / g.h));
        for (int j = std::max(g.j0, cj - w); j <= std::min(g.j0 + g.ny - 1, cj + w); ++j)
            for (int i = std::max(g.i0, ci - w); i <= std::min(g.i0 + g.nx - 1, ci + w); ++i)
                consider(std::size_t(j - g.j0) * g.nx + std::size_t(i - g.i0));
        std::sort(out.begin(), out.end());
        return out;
    }
    const double r = std::abs(z);
    const double theta = std::arg(z);
    for (const RingLayout& ring : lat.rings) {
        const double reach = factor * lat.radii[ring.first];
        if (std::abs(r - ring.rho) >= reach) continue;
        if (ring.count == 1) {
            consider(ring.first);
            continue;
        }
        const double dtheta = 2.0 * kPi / ring.count;
        const int w = int(std::ceil(0.5 * kPi * reach / (ring.rho * dtheta))) + 1;
        if (2 * w + 1 >= ring.count) {
            for (int j = 0; j < ring.count; ++j) consider(ring.first + j);
            continue;
        }
        const int c = int(std::lround(wrap_angle(theta - ring.phase) / dtheta));
        for (int d = -w; d <= w; ++d) {
            const int j = ((c + d) % ring.count + ring.count) % ring.count;
            consider(ring.first + j);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LatticeReport verify_lattice(const Lattice& lat, int n_probe, std::uint64_t seed) {
    if (n_probe < 100) throw DomainError("verify_lattice needs n_probe >= 100");
    LatticeReport rep;
    rep.probes = std::size_t(n_probe);
    const std::uint64_t start = seed * std::uint64_t(n_probe) + 1;
    for (int p = 0; p < n_probe; ++p) {
        const double u = radical_inverse(start + p, 2), v = radical_inverse(start + p, 3);
        Point z;
        if (lat.model.is_fock()) {
            const GridLayout& g = lat.grid;
            const double x0 = (g.i0 - 0.5) * g.h, y0 = (g.j0 - 0.5) * g.h;
            z = Point(x0 + u * g.nx * g.h, y0 + v * g.ny * g.h);
        } else {
            const double outer = std::tanh(lat.rings.back().t_hi);
            z = std::polar(outer * std::sqrt(u), 2.0 * kPi * v);
        }
        const auto nb = lattice_neighbors(lat, z, 1.0);
        if (nb.empty()) ++rep.uncovered;
        rep.multiplicity_max = std::max(rep.multiplicity_max, int(nb.size()));
    }
    rep.covered = rep.uncovered == 0;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < lat.size(); ++n) {
        for (std::size_t m : lattice_neighbors(lat, lat.centers[n], 6.0)) {
            if (m == n) continue;
            gap = std::min(gap, std::abs(lat.centers[n] - lat.centers[m]) / (lat.sep_radii[n] + lat.sep_radii[m]));
        }
    }
    rep.min_gap_ratio = gap;
    return rep;
}

double smoothstep_profile(double x) {
    if (x <= 1.0) return 1.0;
    if (x >= 2.0) return 0.0;
    const double u = x - 1.0;
    return 1.0 - u * u * (3.0 - 2.0 * u);
}

namespace {

struct RawPartition {
    std::vector<std::size_t> indices;
    std::vector<double> g;
    double sum = 0.0;
    bool covered = false;
};

RawPartition raw_partition(const Lattice& lat, Point z) {
    RawPartition p;
    for (std::size_t n : lattice_neighbors(lat, z, 2.0)) {
        const double x = std::abs(z - lat.centers[n]) / lat.radii[n];
        const double g = smoothstep_profile(x);
        if (x <= 1.0) p.covered = true;
        if (g > 0.0) {
            p.indices.push_back(n);
            p.g.push_back(g);
            p.sum += g;
        }
    }
    return p;
}

double psi_value(const Lattice& lat, std::size_t n, Point z) {
    const RawPartition p = raw_partition(lat, z);
    if (p.sum <= 0.0) return 0.0;
    for (std::size_t i = 0; i < p.indices.size(); ++i)
        if (p.indices[i] == n) return p.g[i] / p.sum;
    return 0.0;
}

} // namespace

PartitionWeights partition_of_unity(const Lattice& lat, Point z) {
    const RawPartition p = raw_partition(lat, z);
    if (!p.covered) throw DomainError("partition_of_unity: point is not covered by the lattice");
    PartitionWeights out;
    out.indices = p.indices;
    out.weights.reserve(p.g.size());
    for (double g : p.g) out.weights.push_back(g / p.sum);
    return out;
}

Complex dbar_partition(const Lattice& lat, std::size_t n, Point z, double step) {
    if (!(step > 0.0)) throw DomainError("dbar_partition needs step > 0");
    if (n >= lat.size()) throw DomainError("dbar_partition: index out of range");
    if (!raw_partition(lat, z).covered) throw DomainError("dbar_partition: point is not covered by the lattice");
    const double dx = (psi_value(lat, n, z + step) - psi_value(lat, n, z - step)) / (2.0 * step);
    const double dy = (psi_value(lat, n, z + Complex(0.0, step)) - psi_value(lat, n, z - Complex(0.0, step))) / (2.0 * step);
    return 0.5 * Complex(dx, dy);
}

std::vector<SamplePoint> sampling_points(const Lattice& lat, Refinement refine) {
    if (refine.radial < 1 || refine.angular < 1) throw DomainError("refinement counts must be >= 1");
    std::vector<SamplePoint> out;
    out.reserve(lat.size() * std::size_t(refine.radial) * refine.angular);
    if (lat.model.is_fock()) {
        const double h = lat.grid.h;
        const double m = lat.cell_measure.empty() ? 0.0 : lat.cell_measure[0] / (refine.radial * refine.angular);
        for (std::size_t n = 0; n < lat.size(); ++n) {
            const Point c = lat.centers[n];
            for (int j = 0; j < refine.angular; ++j)
                for (int i = 0; i < refine.radial; ++i) {
                    const double x = c.real() - 0.5 * h + (i + 0.5) * h / refine.radial;
                    const double y = c.imag() - 0.5 * h + (j + 0.5) * h / refine.angular;
                    out.push_back({Point(x, y), m, n});
                }
        }
        return out;
    }
    const double alpha = lat.model.alpha();
    for (const RingLayout& ring : lat.rings) {
        const double width = 2.0 * kPi / ring.count;
        const double dt = (ring.t_hi - ring.t_lo) / refine.radial;
        for (int j = 0; j < ring.count; ++j) {
            const std::size_t n = ring.first + j;
            const double theta_c = ring.count == 1 ? 0.0 : ring.phase + width * j;
            for (int i = 0; i < refine.radial; ++i) {
                const double t0 = ring.t_lo + i * dt, t1 = t0 + dt;
                // the innermost band of the central cell is a disk; sample it at its center
                const double r = t0 <= 0.0 ? 0.0 : std::tanh(0.5 * (t0 + t1));
                const double m = band_measure(alpha, t0, t1) / ring.count / refine.angular;
                for (int q = 0; q < refine.angular; ++q) {
                    const double theta = theta_c - 0.5 * width + (q + 0.5) * width / refine.angular;
                    out.push_back({std::polar(r, theta), m, n});
                }
            }
        }
    }
    return out;
}

void write_lattice_csv(std::ostream& os, const Lattice& lat) {
    os << "index,re,im,radius,cell_measure\n";
    for (std::size_t n = 0; n < lat.size(); ++n)
        os << n << ',' << format_double(lat.centers[n].real()) << ',' << format_double(lat.centers[n].imag()) << ','
           << format_double(lat.radii[n]) << ',' << format_double(lat.cell_measure[n]) << '\n';
}

} // namespace hankel_lab
