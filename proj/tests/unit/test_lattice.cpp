#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"
#include "hankel_lab/lattice.hpp"

using namespace hankel_lab;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
const WeightModel kFock = WeightModel::fock(1.0);
const WeightModel kBergman = WeightModel::bergman(0.0);

double min_pairwise(const Lattice& lat) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = i + 1; j < lat.size(); ++j) m = std::min(m, std::abs(lat.centers[i] - lat.centers[j]));
    return m;
}
} // namespace

TEST_CASE("unit box lattice has the four corners") {
    const Lattice lat = build_lattice_box(kFock, 1.0 / kSqrtPi, 0.0, Point(1.0, 1.0));
    REQUIRE(lat.size() == 4);
    std::vector<Point> c = lat.centers;
    for (Point p : {Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)})
        CHECK(std::any_of(c.begin(), c.end(), [&](Point q) { return std::abs(p - q) < 1e-12; }));
    for (double r : lat.radii) CHECK(r == Approx(0.75).epsilon(1e-14));
    for (double m : lat.cell_measure) CHECK(m == Approx(1.0 / kPi).epsilon(1e-14));
    CHECK_THROWS_AS(build_lattice_box(kBergman, 0.5, 0.0, Point(0.5, 0.5)), DomainError);
}

TEST_CASE("fock grid spacing is delta tau") {
    const Lattice lat = build_lattice(kFock, 1.0, 3.0);
    CHECK(min_pairwise(lat) == Approx(kSqrtPi).epsilon(1e-13));
    const int K = static_cast<int>(std::ceil(3.0 / kSqrtPi));
    CHECK(lat.size() == std::size_t((2 * K + 1) * (2 * K + 1)));
    const Lattice lat2 = build_lattice(WeightModel::fock(4.0), 0.5, 3.0);
    CHECK(min_pairwise(lat2) == Approx(0.5 * std::sqrt(kPi / 4.0)).epsilon(1e-13));
}

TEST_CASE("bergman rings are hyperbolically uniform") {
    const double delta = 0.2;
    const Lattice lat = build_lattice(kBergman, delta, 0.9);
    const double a = delta * kSqrtPi;
    for (std::size_t k = 0; k < lat.rings.size(); ++k) {
        const RingLayout& ring = lat.rings[k];
        CHECK(ring.rho == Approx(std::tanh(k * a)).epsilon(1e-14));
        if (k > 0) {
            const double t = delta * kSqrtPi * (1.0 - ring.rho * ring.rho);
            CHECK(ring.count == int(std::lround(2.0 * kPi * ring.rho / t)));
        }
    }
    CHECK(lat.rings.back().rho > 0.9);
    CHECK(lat.rings[lat.rings.size() - 2].rho <= 0.9);
    // exact lambda measure of the annulus covered by the cells
    const double s = std::sinh(lat.rings.back().t_hi);
    CHECK(lat.total_measure() == Approx(s * s).epsilon(1e-12));
    CHECK_THROWS_AS(build_lattice(kBergman, 0.2, 1.0), DomainError);
    CHECK_THROWS_AS(build_lattice(kFock, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(build_lattice(kFock, 1.5, 1.0), DomainError);
    CHECK_THROWS_AS(build_lattice(kFock, 0.5, -1.0), DomainError);
}

TEST_CASE("covering radius 0.75h covers, 0.60h does not") {
    const Lattice lat = build_lattice_box(kFock, 1.0 / kSqrtPi, Point(-3, -3), Point(3, 3));
    const LatticeReport ok = verify_lattice(lat, 2000, 3);
    CHECK(ok.covered);
    CHECK(ok.uncovered == 0);
    CHECK(ok.multiplicity_max <= 4);
    CHECK(ok.min_gap_ratio == Approx(1.0 / 0.9).epsilon(1e-12));
    const LatticeReport shrunk = verify_lattice(with_radius_factor(lat, 0.60), 2000, 3);
    CHECK(!shrunk.covered);
    CHECK_THROWS_AS(verify_lattice(lat, 10, 0), DomainError);
}

TEST_CASE("verify_lattice is deterministic in the seed") {
    const Lattice lat = build_lattice(kBergman, 0.25, 0.9);
    const LatticeReport a = verify_lattice(lat, 500, 9), b = verify_lattice(lat, 500, 9);
    CHECK(a.min_gap_ratio == b.min_gap_ratio);
    CHECK(a.multiplicity_max == b.multiplicity_max);
    CHECK(a.probes == b.probes);
}

TEST_CASE("radical inverse") {
    CHECK(radical_inverse(1, 2) == 0.5);
    CHECK(radical_inverse(3, 2) == 0.75);
    CHECK(radical_inverse(6, 2) == 0.375);
    CHECK(radical_inverse(1, 3) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(radical_inverse(0, 5) == 0.0);
}

TEST_CASE("smoothstep profile") {
    CHECK(smoothstep_profile(0.3) == 1.0);
    CHECK(smoothstep_profile(1.0) == 1.0);
    CHECK(smoothstep_profile(1.5) == 0.5);
    CHECK(smoothstep_profile(2.0) == 0.0);
    CHECK(smoothstep_profile(5.0) == 0.0);
}

TEST_CASE("partition of unity plateau and symmetric points") {
    const Lattice grid = build_lattice_box(kFock, 1.0 / kSqrtPi, Point(-3, -3), Point(3, 3));
    const Lattice thin = with_radius_factor(grid, 0.45);
    const PartitionWeights single = partition_of_unity(thin, Point(1.0, 1.0));
    REQUIRE(single.weights.size() == 1);
    CHECK(single.weights[0] == 1.0);
    CHECK(std::abs(grid.centers[single.indices[0]] - Point(1.0, 1.0)) < 1e-12);

    const Lattice mid = with_radius_factor(grid, 0.55);
    const PartitionWeights two = partition_of_unity(mid, Point(0.5, 0.0));
    REQUIRE(two.weights.size() == 2);
    CHECK(two.weights[0] == Approx(0.5).epsilon(1e-15));
    CHECK(two.weights[1] == Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(partition_of_unity(thin, Point(0.5, 0.5)), DomainError);

    const Complex d = dbar_partition(thin, single.indices[0], Point(1.05, 0.98), 1e-5);
    CHECK(std::abs(d) < 1e-10);
}

TEST_CASE("partition sums, support and dbar bounds on scanned points") {
    for (const Lattice& lat : {build_lattice(kFock, 0.5, 4.0), build_lattice(kBergman, 0.2, 0.9)}) {
        double worst = 0.0, dbar_max = 0.0, dbar_sum = 0.0;
        for (int i = 0; i < 400; ++i) {
            const double u = radical_inverse(i + 1, 2), v = radical_inverse(i + 1, 3);
            const Point z = lat.model.is_fock() ? Point(4.0 * u - 2.0, 4.0 * v - 2.0) : std::polar(0.8 * std::sqrt(u), 2 * kPi * v);
            const PartitionWeights pw = partition_of_unity(lat, z);
            double s = 0.0;
            for (std::size_t k = 0; k < pw.weights.size(); ++k) {
                s += pw.weights[k];
                CHECK(pw.weights[k] > 0.0);
                CHECK(std::abs(z - lat.centers[pw.indices[k]]) < 2.0 * lat.radii[pw.indices[k]]);
            }
            worst = std::max(worst, std::abs(s - 1.0));
            const double t = tau(lat.model, z);
            Complex total = 0.0;
            for (std::size_t n : lattice_neighbors(lat, z, 2.5)) {
                const Complex d = dbar_partition(lat, n, z, 1e-5 * t);
                total += d;
                dbar_max = std::max(dbar_max, t * std::abs(d));
            }
            dbar_sum = std::max(dbar_sum, std::abs(total));
        }
        CHECK(worst <= 1e-12);
        CHECK(dbar_sum <= 1e-8);
        if (lat.model.is_fock()) CHECK(dbar_max <= 6.0 / lat.delta);
        CHECK(dbar_max <= 10.0);
    }
}

TEST_CASE("neighbors are sorted and within the factor") {
    const Lattice lat = build_lattice(kBergman, 0.25, 0.9);
    const Point z(0.3, -0.4);
    const auto idx = lattice_neighbors(lat, z, 2.0);
    CHECK(std::is_sorted(idx.begin(), idx.end()));
    std::size_t brute = 0;
    for (std::size_t n = 0; n < lat.size(); ++n)
        if (std::abs(z - lat.centers[n]) < 2.0 * lat.radii[n]) ++brute;
    CHECK(idx.size() == brute);
}

TEST_CASE("sampling points carry exact cell measures") {
    for (const Lattice& lat : {build_lattice(WeightModel::fock(2.0), 0.5, 2.0), build_lattice(kBergman, 0.2, 0.9)}) {
        const auto plain = sampling_points(lat);
        REQUIRE(plain.size() == lat.size());
        for (std::size_t i = 0; i < lat.size(); ++i) {
            CHECK(std::abs(plain[i].z - lat.centers[i]) < 1e-14);
            CHECK(plain[i].measure == Approx(lat.cell_measure[i]).epsilon(1e-14));
        }
        const auto fine = sampling_points(lat, {4, 3});
        CHECK(fine.size() == 12 * lat.size());
        std::vector<double> per_cell(lat.size(), 0.0);
        for (const SamplePoint& p : fine) per_cell[p.cell] += p.measure;
        for (std::size_t i = 0; i < lat.size(); ++i) CHECK(per_cell[i] == Approx(lat.cell_measure[i]).epsilon(1e-12));
    }
    CHECK_THROWS_AS(sampling_points(build_lattice(kFock, 0.5, 1.0), {0, 1}), DomainError);
}

TEST_CASE("lattice csv") {
    const Lattice lat = build_lattice(kFock, 1.0, 1.0);
    std::stringstream ss;
    write_lattice_csv(ss, lat);
    const CsvTable t = read_csv(ss);
    CHECK(t.header == std::vector<std::string>{"index", "re", "im", "radius", "cell_measure"});
    CHECK(t.rows.size() == lat.size());
    CHECK(t.values("re")[4] == lat.centers[4].real());
}
