#include <doctest.h>

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"
#include "hankel_lab/hankel.hpp"

using namespace hankel_lab;
using doctest::Approx;

namespace {
const WeightModel kFock = WeightModel::fock(1.0);
const WeightModel kBergman = WeightModel::bergman(0.0);

SpectrumResult from_values(std::vector<double> s) {
    SpectrumResult r;
    r.s = std::move(s);
    r.N = int(r.s.size());
    return r;
}

Symbol without_metadata(const Symbol& f) {
    Symbol g;
    g.name = f.name + "_plain";
    g.eval = f.eval;
    g.jump_radius = f.jump_radius;
    return g;
}
} // namespace

TEST_CASE("matrix element examples") {
    const GlobalRule rf = global_rule(kFock), rb = global_rule(kBergman);
    CHECK(std::abs(matrix_element(kFock, catalog_symbol("conj_z"), 3, 4, rf) - 2.0) < 1e-13);
    CHECK(std::abs(matrix_element(kBergman, catalog_symbol("conj_z"), 0, 1, rb) - 1.0 / std::sqrt(2.0)) < 1e-14);
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
            if (j != k) {
                CHECK(std::abs(matrix_element(kFock, catalog_symbol("const_1"), j, k, rf)) < 1e-15);
                CHECK(std::abs(matrix_element(kBergman, catalog_symbol("const_1"), j, k, rb)) < 1e-15);
            }
    CHECK_THROWS_AS(matrix_element(kFock, catalog_symbol("conj_z"), -1, 0, rf), DomainError);
}

TEST_CASE("closed-form matrix elements agree with quadrature") {
    const GlobalRule rf = global_rule(kFock), rb = global_rule(kBergman);
    for (const char* name : {"conj_z", "conj_z_sq", "2,3", "3,1", "bounded_mix", "radial_bump"})
        for (auto [j, k] : {std::pair{0, 1}, {2, 4}, {5, 3}, {1, 1}, {7, 9}}) {
            const Symbol f = catalog_symbol(name);
            for (const auto& [model, rule] : {std::pair{kFock, &rf}, {kBergman, &rb}}) {
                const QuadratureElement q = matrix_element_quadrature(model, f, j, k, *rule);
                CHECK_MESSAGE(std::abs(q.value - matrix_element(model, f, j, k, *rule)) < 1e-11, name);
                CHECK(!q.flagged);
            }
        }
}

TEST_CASE("gram examples") {
    const HermitianMatrix zero = gram_matrix(make_gram_spec(kFock, catalog_symbol("const_1"), 6));
    CHECK(zero.frobenius_norm() == 0.0);
    const HermitianMatrix id = gram_matrix(make_gram_spec(kFock, catalog_symbol("conj_z"), 8, 8));
    const HermitianMatrix dg = gram_matrix(make_gram_spec(kBergman, catalog_symbol("conj_z"), 8, 8));
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::abs(id(j, k) - (j == k ? 1.0 : 0.0)) < 1e-12);
            CHECK(std::abs(dg(j, k) - (j == k ? 1.0 / ((k + 1.0) * (k + 2.0)) : 0.0)) < 1e-14);
        }
}

TEST_CASE("jump symbol gram diagonal against incomplete gamma") {
    // ||f e_k||^2 = Q(k,1)/k, |<f e_k, e_{k-1}>|^2 = Q(k,1)^2/k, k >= 1; ||f e_0||^2 = E_1(1)
    const HermitianMatrix g = gram_matrix(make_gram_spec(kFock, catalog_symbol("inv_z_outside"), 40));
    CHECK(g(0, 0).real() == Approx(boost::math::expint(1, 1.0)).epsilon(1e-12));
    for (int k = 1; k < 40; ++k) {
        const double oracle = boost::math::gamma_p(double(k), 1.0) * boost::math::gamma_q(double(k), 1.0) / k;
        CHECK(g(k, k).real() == Approx(oracle).epsilon(1e-9));
        if (k + 1 < 40) CHECK(std::abs(g(k, k + 1)) == 0.0);
    }
    std::vector<double> oracle{std::sqrt(boost::math::expint(1, 1.0))};
    for (int k = 1; k < 64; ++k)
        oracle.push_back(std::sqrt(boost::math::gamma_p(double(k), 1.0) * boost::math::gamma_q(double(k), 1.0) / k));
    std::sort(oracle.rbegin(), oracle.rend());
    const SpectrumResult s = spectrum(make_gram_spec(kFock, catalog_symbol("inv_z_outside"), 64));
    for (int n = 0; n < 40; ++n) CHECK(s.s[n] == Approx(oracle[n]).epsilon(1e-8));
}

TEST_CASE("singular value examples") {
    const SpectrumResult b = spectrum(make_gram_spec(kBergman, catalog_symbol("conj_z"), 3));
    CHECK(b.s[0] == Approx(0.7071067811865476).epsilon(1e-14));
    CHECK(b.s[1] == Approx(0.4082482904638630).epsilon(1e-14));
    CHECK(b.s[2] == Approx(0.2886751345948129).epsilon(1e-14));
    const SpectrumResult f = spectrum(make_gram_spec(kFock, catalog_symbol("conj_z"), 5));
    for (double v : f.s) CHECK(v == Approx(1.0).epsilon(1e-13));
    const SpectrumResult z = singular_values(HermitianMatrix(4));
    CHECK(z.s == std::vector<double>(4, 0.0));
    HermitianMatrix neg(2);
    neg(0, 0) = -1.0;
    neg(1, 1) = 1.0;
    CHECK_THROWS_AS(singular_values(neg), NumericalError);
}

TEST_CASE("gram matrices are Hermitian and PSD; banded spectra are M-stable") {
    for (const WeightModel& m : {kFock, kBergman, WeightModel::bergman(1.5), WeightModel::fock(2.0)})
        for (const auto& name : catalog_names()) {
            const GramSpec spec = make_gram_spec(m, catalog_symbol(name), 16);
            const HermitianMatrix g = gram_matrix(spec);
            CHECK(g.hermitian_defect() <= 1e-14 * std::max(1.0, g.frobenius_norm()));
            const SpectrumResult s = spectrum(spec);
            CHECK(s.gram_min_eig >= -1e-12 * std::max(1.0, g.frobenius_norm()));
            CHECK(std::is_sorted(s.s.rbegin(), s.s.rend()));
            if (catalog_symbol(name).angular_band) CHECK_MESSAGE(s.stability <= 1e-12, name);
            CHECK(s.M_used == spec.M);
        }
}

TEST_CASE("projection defaults") {
    CHECK(make_gram_spec(kFock, catalog_symbol("conj_z"), 10).M == 10);
    CHECK(make_gram_spec(kFock, catalog_symbol("holo_z_sq"), 10).M == 12);
    CHECK(make_gram_spec(kFock, catalog_symbol("2,5"), 10).M == 10);
    CHECK(make_gram_spec(kFock, catalog_symbol("inv_z_outside"), 10).M == 10);
    CHECK(default_projection(without_metadata(catalog_symbol("conj_z")), 10) == 26);
    CHECK(gram_path(catalog_symbol("2,1")) == GramPath::Monomial);
    CHECK(gram_path(catalog_symbol("bounded_mix")) == GramPath::Rotational);
    CHECK(gram_path(without_metadata(catalog_symbol("bounded_mix"))) == GramPath::Quadrature);
    CHECK_THROWS_AS(make_gram_spec(kFock, catalog_symbol("conj_z"), 0), DomainError);
    CHECK_THROWS_AS(make_gram_spec(kFock, catalog_symbol("conj_z"), 8, 4), DomainError);
}

TEST_CASE("rotational and quadrature paths give the same spectrum") {
    const Symbol f = catalog_symbol("bounded_mix");
    const SpectrumResult a = spectrum(make_gram_spec(kFock, f, 12, 28));
    const SpectrumResult b = spectrum(make_gram_spec(kFock, without_metadata(f), 12, 28));
    for (int n = 0; n < 12; ++n) CHECK(a.s[n] == Approx(b.s[n]).epsilon(1e-10));
}

TEST_CASE("berezin profile examples") {
    const std::vector<Point> origin{0.0};
    CHECK(berezin_profile(make_gram_spec(kFock, catalog_symbol("conj_z"), 48), origin)[0] == Approx(1.0).epsilon(1e-12));
    CHECK(berezin_profile(make_gram_spec(kFock, catalog_symbol("const_1"), 8), {0.0, Point(0.5, 0.5)}) ==
          std::vector<double>{0.0, 0.0});
    CHECK(berezin_profile(make_gram_spec(kBergman, catalog_symbol("conj_z"), 8), origin)[0] ==
          Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(berezin_profile(make_gram_spec(kFock, catalog_symbol("conj_z"), 4), {Point(3.0, 0.0)}),
                    DomainError);
}

TEST_CASE("toeplitz form examples") {
    const GlobalRule rf = global_rule(kFock);
    const std::vector<Complex> e0{1.0};
    CHECK(toeplitz_form(kFock, constant_symbol(1.0), e0, rf) == Approx(1.0).epsilon(1e-13));
    Symbol abs2;
    abs2.name = "abs2";
    abs2.eval = [](Point z) { return Complex(std::norm(z)); };
    CHECK(toeplitz_form(kFock, abs2, e0, rf) == Approx(1.0).epsilon(1e-13));
    CHECK(toeplitz_form(kFock, constant_symbol(0.0), {1.0, 2.0}, rf) == 0.0);
    CHECK_THROWS_AS(toeplitz_form(kFock, constant_symbol(-1.0), e0, rf), DomainError);
    const HermitianMatrix t = toeplitz_gram(kBergman, constant_symbol(1.0), 5, global_rule(kBergman));
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(t(j, k) - (j == k ? 1.0 : 0.0)) < 1e-13);
}

TEST_CASE("convex trace and Schatten norms") {
    const SpectrumResult s = from_values({1.0, 0.5, 0.25});
    CHECK(convex_trace(s, 0.4) == Approx(0.7).epsilon(1e-15));
    CHECK(convex_trace(s, 1.0) == 0.0);
    CHECK(convex_trace(s, 1e-300) == Approx(1.75).epsilon(1e-15));
    CHECK_THROWS_AS(convex_trace(s, 0.0), DomainError);
    const SchattenNorms n1 = schatten(s, 1.0);
    CHECK(n1.sp == 1.75);
    CHECK(n1.sp_weak == 1.0);
    const SchattenNorms n2 = schatten(from_values(std::vector<double>(9, 1.0)), 2.0);
    CHECK(n2.sp == Approx(3.0).epsilon(1e-15));
    CHECK(n2.sp_weak == Approx(3.0).epsilon(1e-15));
    const SchattenNorms b = schatten(spectrum(make_gram_spec(kBergman, catalog_symbol("conj_z"), 64)), 1.0);
    double expected = 0.0;
    for (int n = 0; n < 64; ++n) expected = std::max(expected, (1.0 + n) / std::sqrt((n + 1.0) * (n + 2.0)));
    CHECK(b.sp_weak == Approx(expected).epsilon(1e-10));
    CHECK(b.sp_weak >= 0.70);
    CHECK(b.sp_weak <= 1.0);
}

TEST_CASE("spectrum csv and diagnostics") {
    const SpectrumResult s = spectrum(make_gram_spec(kBergman, catalog_symbol("conj_z"), 3));
    std::stringstream csv, diag;
    write_spectrum_csv(csv, s);
    write_spectrum_diagnostics(diag, s);
    const CsvTable t = read_csv(csv);
    CHECK(t.header == std::vector<std::string>{"n", "s_n"});
    CHECK(t.values("s_n") == s.s);
    CHECK(csv.str().find("0,0.70710678118654") != std::string::npos);
    CHECK(diag.str().find("N=3\n") != std::string::npos);
    CHECK(diag.str().find("stability=") != std::string::npos);
}
