#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"
#include "hankel_lab/rearrange.hpp"

using namespace hankel_lab;
using doctest::Approx;

namespace {
const WeightedSamples kExample{{3.0, 1.0, 2.0}, {0.5, 1.0, 0.25}};
const double kSqrtPi = std::sqrt(std::numbers::pi);
} // namespace

TEST_CASE("distribution examples") {
    CHECK(distribution(kExample, 2.5) == 0.5);
    CHECK(distribution(kExample, 3.0) == 0.0);
    CHECK(distribution(kExample, 10.0) == 0.0);
    CHECK(distribution(kExample, 0.0) == 1.75);
    // indicator of the unit disk on Fock cells of measure h^2/pi
    const Lattice lat = build_lattice(WeightModel::fock(1.0), 0.05, 1.5);
    WeightedSamples ind;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        ind.values.push_back(std::abs(lat.centers[i]) < 1.0 ? 1.0 : 0.0);
        ind.measures.push_back(lat.cell_measure[i]);
    }
    CHECK(distribution(ind, 0.5) == Approx(1.0).epsilon(0.02));
    CHECK_THROWS_AS(distribution(kExample, -1.0), DomainError);
}

TEST_CASE("rearrangement example") {
    const RearrangementCurve c = rearrangement(kExample);
    CHECK(c.values == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(c.breakpoints == std::vector<double>{0.0, 0.5, 0.75, 1.75});
    CHECK(c.total_measure == 1.75);
    CHECK(c.evaluate(0.0) == 3.0);
    CHECK(c.evaluate(0.6) == 2.0);
    CHECK(c.evaluate(0.75) == 1.0);
    CHECK(c.evaluate(1.75) == 0.0);
    CHECK(c.evaluate(100.0) == 0.0);
    CHECK_THROWS_AS(c.evaluate(-0.1), DomainError);
}

TEST_CASE("constant samples and merged ties") {
    const RearrangementCurve c = rearrangement(WeightedSamples{{2.0, 2.0, 0.0}, {0.25, 0.5, 3.0}});
    CHECK(c.values == std::vector<double>{2.0});
    CHECK(c.breakpoints == std::vector<double>{0.0, 0.75});
    CHECK(weak_lp(c, 2.0) == Approx(2.0 * std::sqrt(0.75)).epsilon(1e-15));
    CHECK_THROWS_AS(rearrangement(WeightedSamples{}), DomainError);
    CHECK_THROWS_AS(rearrangement(WeightedSamples{{1.0}, {0.0}}), DomainError);
    CHECK_THROWS_AS(rearrangement(WeightedSamples{{-1.0}, {1.0}}), DomainError);
    CHECK_THROWS_AS(rearrangement(WeightedSamples{{1.0, 2.0}, {1.0}}), DomainError);
}

TEST_CASE("weak and strong norms") {
    const RearrangementCurve c = rearrangement(kExample);
    CHECK(weak_lp(c, 1.0) == 1.75);
    CHECK(weak_lp(kExample, 1.0) == 1.75);
    CHECK(lp_norm(WeightedSamples{{2.0}, {0.25}}, 2.0) == 1.0);
    CHECK(lp_norm(kExample, 1.0) == 3.0);
    CHECK(lp_norm(c, 1.0) == 3.0);
    CHECK_THROWS_AS(lp_norm(kExample, std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(lp_norm(c, std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(weak_lp(c, 0.0), DomainError);
}

TEST_CASE("random instances: inf definition, equimeasurability, Chebyshev") {
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        WeightedSamples s;
        const int n = 1 + int(u(rng) * 12);
        for (int i = 0; i < n; ++i) {
            s.values.push_back(u(rng) < 0.2 ? 0.0 : std::floor(u(rng) * 5.0) * 0.5);
            s.measures.push_back(0.125 * (1 + int(u(rng) * 8)));
        }
        const RearrangementCurve c = rearrangement(s);
        for (int q = 0; q < 10; ++q) {
            const double t = u(rng) * (c.total_measure + 1.0);
            double best = std::numeric_limits<double>::infinity();
            for (double cand : s.values)
                if (distribution(s, cand) <= t) best = std::min(best, cand);
            if (distribution(s, 0.0) <= t) best = 0.0;
            CHECK(c.evaluate(t) == best);
        }
        for (int q = 0; q < 5; ++q) {
            const double level = u(rng) * 2.5;
            double curve_measure = 0.0;
            for (std::size_t k = 0; k < c.values.size(); ++k)
                if (c.values[k] > level) curve_measure += c.breakpoints[k + 1] - c.breakpoints[k];
            CHECK(curve_measure == Approx(distribution(s, level)).epsilon(1e-14));
        }
        for (double p : {1.0, 1.5, 2.0}) {
            CHECK(lp_norm(c, p) == Approx(lp_norm(s, p)).epsilon(1e-13));
            CHECK(weak_lp(c, p) <= lp_norm(s, p) * (1.0 + 1e-13));
        }
    }
}

TEST_CASE("closed form for tau on the Bergman disk") {
    CHECK(tau_rearrangement_closed_form(0.0) == Approx(kSqrtPi).epsilon(1e-15));
    CHECK(tau_rearrangement_closed_form(1e12) < 1e-11);
    const ClosedFormReport r = rearrangement_closed_form_check(WeightModel::bergman(0.0));
    CHECK(r.max_relative_error <= 0.02);
    CHECK(r.weak_l1_relative_error <= 0.05);
    CHECK(r.weak_l1_expected == Approx(kSqrtPi).epsilon(1e-15));
    CHECK(r.points_checked > 100);
    CHECK_THROWS_AS(rearrangement_closed_form_check(WeightModel::fock(1.0)), DomainError);
}

TEST_CASE("weak L1 of tau on a delta 0.25 lattice is near sqrt(pi)") {
    const WeightModel berg = WeightModel::bergman(0.0);
    const Lattice lat = build_lattice(berg, 0.25, 0.999);
    WeightedSamples s;
    for (const SamplePoint& p : sampling_points(lat, {32, 1})) {
        s.values.push_back(tau(berg, p.z));
        s.measures.push_back(p.measure);
    }
    CHECK(weak_lp(s, 1.0) == Approx(kSqrtPi).epsilon(0.05));
}

TEST_CASE("curve csv") {
    std::stringstream ss;
    write_curve_csv(ss, rearrangement(kExample));
    const CsvTable t = read_csv(ss);
    CHECK(t.header == std::vector<std::string>{"t", "fstar"});
    CHECK(t.values("t") == std::vector<double>{0.0, 0.5, 0.75, 1.75});
    CHECK(t.values("fstar") == std::vector<double>{3.0, 2.0, 1.0, 0.0});
}
