#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"
#include "hankel_lab/linalg.hpp"
#include "hankel_lab/special.hpp"

using namespace hankel_lab;
using doctest::Approx;

TEST_CASE("log gamma and beta") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(0.5) == Approx(0.5 * std::log(M_PI)).epsilon(1e-15));
    CHECK(log_factorial(10) == Approx(std::log(3628800.0)).epsilon(1e-15));
    CHECK(log_beta(2.0, 3.0) == Approx(std::log(1.0 / 12.0)).epsilon(1e-14));
    CHECK(std::isfinite(log_factorial(100000)));
}

TEST_CASE("jacobi eigenvalues of a small Hermitian matrix") {
    HermitianMatrix a(2);
    a(0, 0) = 2.0;
    a(1, 1) = 2.0;
    a(0, 1) = Complex(0.0, 1.0);
    a(1, 0) = Complex(0.0, -1.0);
    const auto ev = jacobi_eigenvalues(a);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == Approx(1.0).epsilon(1e-14));
    CHECK(ev[1] == Approx(3.0).epsilon(1e-14));
}

TEST_CASE("jacobi eigenvalues: trace and Frobenius invariants") {
    const std::size_t n = 24;
    HermitianMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Complex v(std::sin(1.0 + i * 7.0 + j * 3.0), i == j ? 0.0 : std::cos(2.0 * i + j));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    CHECK(a.hermitian_defect() == 0.0);
    const auto ev = jacobi_eigenvalues(a);
    double tr = 0.0, sq = 0.0;
    for (double e : ev) {
        tr += e;
        sq += e * e;
    }
    double tr_a = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr_a += a(i, i).real();
    CHECK(tr == Approx(tr_a).epsilon(1e-12));
    CHECK(std::sqrt(sq) == Approx(a.frobenius_norm()).epsilon(1e-12));
    CHECK(std::is_sorted(ev.begin(), ev.end()));
}

TEST_CASE("tridiagonal eigenvalues of the discrete Laplacian") {
    const int n = 10;
    std::vector<double> d(n, 2.0), e(n - 1, -1.0);
    const auto ev = tridiagonal_eigenvalues(d, e);
    for (int k = 1; k <= n; ++k)
        CHECK(ev[k - 1] == Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-13));
}

TEST_CASE("csv round trip") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    std::istringstream in("a,b\n1,2.5\n-3e-4,0.10000000000000001\n");
    const CsvTable t = read_csv(in);
    CHECK(t.header == std::vector<std::string>{"a", "b"});
    CHECK(t.values("b")[1] == 0.1);
    CHECK(t.column("a") == 0);
    CHECK_THROWS_AS(t.column("c"), ConfigError);
    std::istringstream ragged("a,b\n1\n");
    CHECK_THROWS_AS(read_csv(ragged), ConfigError);
    std::istringstream bad("a\nx\n");
    CHECK_THROWS_AS(read_csv(bad), ConfigError);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_csv(empty), ConfigError);
    CHECK_THROWS_AS(read_csv_file("/nonexistent/file.csv"), ConfigError);
}
