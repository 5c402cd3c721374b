#include "hankel_lab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hankel_lab/error.hpp"

namespace hankel_lab {

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double HermitianMatrix::hermitian_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

namespace {

double off_diagonal_norm(const HermitianMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Annihilates a(p, q). The phase of a(p, q) is first absorbed into column q
// so that the remaining 2x2 problem is real symmetric.
void rotate(HermitianMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) return;
    const Complex phase = std::conj(apq) / g;  // apq * phase = g
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const Complex arp = a(r, p);
        const Complex arq = a(r, q) * phase;
        const Complex new_rp = c * arp - s * arq;
        const Complex new_rq = s * arp + c * arq;
        a(r, p) = new_rp;
        a(p, r) = std::conj(new_rp);
        a(r, q) = new_rq;
        a(q, r) = std::conj(new_rq);
    }
    a(p, p) = app - t * g;
    a(q, q) = aqq + t * g;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

} // namespace

std::vector<double> jacobi_eigenvalues(HermitianMatrix a, const EigenOptions& options) {
    const std::size_t n = a.size();
    std::vector<double> eig(n);
    if (n == 0) return eig;
    const double scale = a.frobenius_norm();
    if (scale > 0.0) {
        int sweep = 0;
        while (off_diagonal_norm(a) > options.relative_tolerance * scale) {
            if (++sweep > options.max_sweeps)
                throw NumericalError("jacobi_eigenvalues: no convergence after " +
                                     std::to_string(options.max_sweeps) + " sweeps");
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
        }
    }
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal) {
    const std::size_t n = diagonal.size();
    std::vector<double> d(diagonal.begin(), diagonal.end());
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i + 1 < n && i < off_diagonal.size(); ++i) e[i] = off_diagonal[i];

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.2e-16 * dd) break;
            }
            if (m != l) {
                if (++iter > 200) throw NumericalError("tridiagonal_eigenvalues: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                std::size_t i = m;
                bool early = false;
                while (i-- > l) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        early = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (early) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace hankel_lab
