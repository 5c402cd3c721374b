#include "hankel_lab/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"
#include "hankel_lab/parallel.hpp"

namespace hankel_lab {

namespace {

using Table = std::vector<std::vector<Complex>>;

// E[m][q] = sqrt(W_q) e_m(z_q), evaluated in the log domain.
Table scaled_basis(const WeightModel& model, const GlobalRule& rule, int count) {
    const std::size_t nq = rule.nodes.size();
    std::vector<double> half_log_w(nq), log_r(nq), theta(nq);
    for (std::size_t q = 0; q < nq; ++q) {
        half_log_w[q] = 0.5 * std::log(rule.weights[q]);
        log_r[q] = std::log(std::abs(rule.nodes[q]));
        theta[q] = std::arg(rule.nodes[q]);
    }
    Table e(std::size_t(std::max(count, 0)), std::vector<Complex>(nq));
    parallel_for(e.size(), [&](std::size_t m) {
        const double lc = -0.5 * log_norm_sq(model, int(m));
        for (std::size_t q = 0; q < nq; ++q)
            e[m][q] = std::polar(std::exp(half_log_w[q] + lc + double(m) * log_r[q]), double(m) * theta[q]);
    });
    return e;
}

std::vector<Complex> symbol_values(const Symbol& f, const GlobalRule& rule) {
    std::vector<Complex> v(rule.nodes.size());
    for (std::size_t q = 0; q < v.size(); ++q) v[q] = f(rule.nodes[q]);
    return v;
}

void check_indices(int j, int k) {
    if (j < 0 || k < 0) throw DomainError("basis indices must be non-negative");
}

Complex monomial_element(const WeightModel& model, Monomial mono, int j, int k) {
    if (mono.a + k != mono.b + j) return 0.0;
    return std::exp(log_norm_sq(model, mono.a + k) - 0.5 * log_norm_sq(model, k) - 0.5 * log_norm_sq(model, j));
}

Complex rotational_element(const WeightModel& model, const Rotational& rot, int j, int k, const RadialRule& radial) {
    if (j != k + rot.power) return 0.0;
    const double shift = -0.5 * log_norm_sq(model, k) - 0.5 * log_norm_sq(model, j);
    double acc = 0.0;
    for (std::size_t i = 0; i < radial.s.size(); ++i) {
        const double q = rot.radial(std::sqrt(radial.s[i]));
        if (q == 0.0) continue;
        acc += std::exp(radial.log_weights[i] + j * std::log(radial.s[i]) + shift) * q;
    }
    return acc;
}

Complex quadrature_element(const WeightModel& model, const Symbol& f, int j, int k, const GlobalRule& rule) {
    const Table e = scaled_basis(model, rule, std::max(j, k) + 1);
    Complex acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) acc += f(rule.nodes[q]) * e[k][q] * std::conj(e[j][q]);
    return acc;
}

// log(norm(n1+1)/norm(n1)) - log(norm(n2+1)/norm(n2)), formed from the
// exact difference of the two ratios so that n1 close to n2 loses nothing.
double log_step_difference(const WeightModel& model, int n1, int n2) {
    const double d = double(n1 - n2);
    if (model.is_fock()) return std::log1p(d / (n2 + 1.0));
    const double a1 = model.alpha() + 1.0;
    return std::log1p(a1 * d / ((n1 + a1 + 1.0) * (n2 + 1.0)));
}

HermitianMatrix monomial_gram(const WeightModel& model, Monomial mono, int N, int M) {
    HermitianMatrix g(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        const double lk = log_norm_sq(model, k);
        const int m = k + mono.a - mono.b;
        if (m >= 0 && m < M) {
            // norm(a+b+k)/norm(k) - norm(a+k)^2/(norm(k) norm(m)) = prefactor * expm1(e)
            double e = 0.0;
            for (int i = 0; i < mono.b; ++i) e += log_step_difference(model, mono.a + k + i, m + i);
            const double prefactor = std::exp(2.0 * log_norm_sq(model, mono.a + k) - lk - log_norm_sq(model, m));
            g(k, k) = prefactor * std::expm1(e);
        } else {
            g(k, k) = std::exp(log_norm_sq(model, mono.a + mono.b + k) - lk);
        }
    }
    return g;
}

HermitianMatrix rotational_gram(const WeightModel& model, const Rotational& rot, int N, int M,
                                const RadialRule& radial) {
    const std::size_t n = radial.s.size();
    std::vector<double> q(n), log_s(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = rot.radial(std::sqrt(radial.s[i]));
        log_s[i] = std::log(radial.s[i]);
    }
    HermitianMatrix g(static_cast<std::size_t>(N));
    std::vector<double> a(n);
    for (int k = 0; k < N; ++k) {
        const int m = k + rot.power;
        const double lk = log_norm_sq(model, k);
        double v = 0.0;
        if (m >= 0 && m < M) {
            // (norm(m)/norm(k)) Var_{P_m}(Q) with P_m = s^m dA_omega / norm(m), pairwise form
            const double lm = log_norm_sq(model, m);
            for (std::size_t i = 0; i < n; ++i) a[i] = std::exp(radial.log_weights[i] + m * log_s[i] - lm);
            double var = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] == 0.0) continue;
                double inner = 0.0;
                for (std::size_t l = i + 1; l < n; ++l) {
                    const double d = q[i] - q[l];
                    inner += a[l] * d * d;
                }
                var += a[i] * inner;
            }
            v = std::exp(lm - lk) * var;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (q[i] == 0.0) continue;
                v += std::exp(radial.log_weights[i] + m * log_s[i] - lk) * q[i] * q[i];
            }
        }
        g(k, k) = v;
    }
    return g;
}

HermitianMatrix quadrature_gram(const WeightModel& model, const Symbol& f, int N, int M, const GlobalRule& rule) {
    const Table e = scaled_basis(model, rule, std::max(N, M));
    const std::vector<Complex> fv = symbol_values(f, rule);
    const std::size_t nq = rule.nodes.size();
    Table residual(static_cast<std::size_t>(N), std::vector<Complex>(nq));
    parallel_for(std::size_t(N), [&](std::size_t k) {
        std::vector<Complex>& r = residual[k];
        for (std::size_t q = 0; q < nq; ++q) r[q] = fv[q] * e[k][q];
        std::vector<Complex> proj(static_cast<std::size_t>(M));
        for (int m = 0; m < M; ++m) {
            Complex acc = 0.0;
            for (std::size_t q = 0; q < nq; ++q) acc += fv[q] * e[k][q] * std::conj(e[m][q]);
            proj[m] = acc;
        }
        for (int m = 0; m < M; ++m)
            for (std::size_t q = 0; q < nq; ++q) r[q] -= proj[m] * e[m][q];
    });
    HermitianMatrix g(static_cast<std::size_t>(N));
    parallel_for(std::size_t(N), [&](std::size_t k) {
        for (std::size_t j = 0; j <= k; ++j) {
            Complex acc = 0.0;
            for (std::size_t q = 0; q < nq; ++q) acc += residual[k][q] * std::conj(residual[j][q]);
            g(j, k) = acc;
        }
    });
    for (std::size_t k = 0; k < std::size_t(N); ++k) {
        g(k, k) = g(k, k).real();
        for (std::size_t j = 0; j < k; ++j) g(k, j) = std::conj(g(j, k));
    }
    return g;
}

const GlobalRule& rule_of(const GramSpec& spec, std::shared_ptr<const GlobalRule>& holder) {
    holder = spec.rule ? spec.rule : default_global_rule(spec.model, spec.f);
    if (!(holder->model == spec.model)) throw DomainError("global rule built for a different model");
    return *holder;
}

} // namespace

int default_projection(const Symbol& f, int N) {
    if (f.angular_band) return N + std::max(0, f.angular_band->max);
    return N + 16;
}

GramSpec make_gram_spec(const WeightModel& model, const Symbol& f, int N, std::optional<int> M) {
    if (N < 1) throw DomainError("truncation N must be >= 1");
    GramSpec spec;
    spec.model = model;
    spec.f = f;
    spec.N = N;
    spec.M = M ? *M : default_projection(f, N);
    if (spec.M < N) throw DomainError("projection truncation M must be >= N");
    return spec;
}

std::shared_ptr<const GlobalRule> default_global_rule(const WeightModel& model, const Symbol& f) {
    return std::make_shared<const GlobalRule>(global_rule(model, 96, 128, split_radius_for(f, model)));
}

GramPath gram_path(const Symbol& f) {
    if (f.monomial) return GramPath::Monomial;
    if (f.rotational) return GramPath::Rotational;
    return GramPath::Quadrature;
}

Complex matrix_element(const WeightModel& model, const Symbol& f, int j, int k, const GlobalRule& rule) {
    check_indices(j, k);
    switch (gram_path(f)) {
    case GramPath::Monomial:
        return monomial_element(model, *f.monomial, j, k);
    case GramPath::Rotational:
        return rotational_element(model, *f.rotational, j, k, rule.radial);
    case GramPath::Quadrature:
        break;
    }
    return quadrature_element(model, f, j, k, rule);
}

QuadratureElement matrix_element_quadrature(const WeightModel& model, const Symbol& f, int j, int k,
                                            const GlobalRule& rule) {
    check_indices(j, k);
    QuadratureElement out;
    out.value = quadrature_element(model, f, j, k, rule);
    const GlobalRule coarse = global_rule(model, std::max(1, rule.n_r / 2), rule.n_t, split_radius_for(f, model));
    out.error_estimate = std::abs(out.value - quadrature_element(model, f, j, k, coarse));
    out.flagged = out.error_estimate > 1e-9;
    return out;
}

HermitianMatrix gram_matrix(const GramSpec& spec) {
    if (spec.N < 1) throw DomainError("truncation N must be >= 1");
    if (spec.M < spec.N) throw DomainError("projection truncation M must be >= N");
    switch (gram_path(spec.f)) {
    case GramPath::Monomial:
        return monomial_gram(spec.model, *spec.f.monomial, spec.N, spec.M);
    case GramPath::Rotational: {
        std::shared_ptr<const GlobalRule> holder;
        return rotational_gram(spec.model, *spec.f.rotational, spec.N, spec.M, rule_of(spec, holder).radial);
    }
    case GramPath::Quadrature:
        break;
    }
    std::shared_ptr<const GlobalRule> holder;
    return quadrature_gram(spec.model, spec.f, spec.N, spec.M, rule_of(spec, holder));
}

SpectrumResult singular_values(const HermitianMatrix& gram) {
    SpectrumResult out;
    out.N = int(gram.size());
    if (gram.size() == 0) return out;
    const std::vector<double> eig = jacobi_eigenvalues(gram);
    const double scale = std::max(1.0, gram.frobenius_norm());
    out.gram_min_eig = eig.front();
    if (out.gram_min_eig < -1e-8 * scale)
        throw NumericalError("Gram matrix is not positive semi-definite (min eigenvalue " +
                             format_double(out.gram_min_eig) + ")");
    out.s.reserve(eig.size());
    for (auto it = eig.rbegin(); it != eig.rend(); ++it) out.s.push_back(std::sqrt(std::max(0.0, *it)));
    return out;
}

SpectrumResult spectrum(const GramSpec& spec) {
    GramSpec shared = spec;
    if (gram_path(spec.f) != GramPath::Monomial && !shared.rule) shared.rule = default_global_rule(spec.model, spec.f);
    SpectrumResult out = singular_values(gram_matrix(shared));
    GramSpec wider = shared;
    wider.M = shared.M + 8;
    const SpectrumResult more = singular_values(gram_matrix(wider));
    out.M_used = shared.M;
    for (std::size_t n = 0; n < out.s.size(); ++n) out.stability = std::max(out.stability, std::abs(out.s[n] - more.s[n]));
    return out;
}

std::vector<double> berezin_profile(const GramSpec& spec, const std::vector<Point>& points) {
    return berezin_profile(spec, gram_matrix(spec), points);
}

std::vector<double> berezin_profile(const GramSpec& spec, const HermitianMatrix& gram,
                                    const std::vector<Point>& points) {
    if (gram.size() != std::size_t(spec.N)) throw DomainError("berezin_profile: Gram size differs from N");
    std::vector<double> out;
    out.reserve(points.size());
    std::vector<Complex> c(std::size_t(spec.N));
    for (const Point& z : points) {
        const double kzz = kernel_diagonal(spec.model, z);
        double mass = 0.0;
        for (int n = 0; n < spec.N; ++n) {
            const Complex en = basis_value(spec.model, n, z);
            mass += std::norm(en);
            c[n] = std::conj(en) / std::sqrt(kzz);
        }
        if (mass / kzz < 0.999)
            throw DomainError("berezin_profile: truncated kernel mass " + format_double(mass / kzz) +
                              " < 0.999; enlarge N");
        Complex acc = 0.0;
        for (int j = 0; j < spec.N; ++j)
            for (int k = 0; k < spec.N; ++k) acc += std::conj(c[j]) * gram(j, k) * c[k];
        out.push_back(std::sqrt(std::max(0.0, acc.real())));
    }
    return out;
}

namespace {

std::vector<double> density_values(const Symbol& mu, const GlobalRule& rule) {
    std::vector<double> v(rule.nodes.size());
    for (std::size_t q = 0; q < v.size(); ++q) {
        const double x = mu(rule.nodes[q]).real();
        if (x < 0.0) throw DomainError("Toeplitz density is negative at a quadrature node");
        v[q] = x;
    }
    return v;
}

} // namespace

double toeplitz_form(const WeightModel& model, const Symbol& mu_density, const std::vector<Complex>& coeffs,
                     const GlobalRule& rule) {
    const Table e = scaled_basis(model, rule, int(coeffs.size()));
    const std::vector<double> mu = density_values(mu_density, rule);
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        Complex g = 0.0;
        for (std::size_t n = 0; n < coeffs.size(); ++n) g += coeffs[n] * e[n][q];
        acc += std::norm(g) * mu[q];
    }
    return acc;
}

HermitianMatrix toeplitz_gram(const WeightModel& model, const Symbol& mu_density, int N, const GlobalRule& rule) {
    const Table e = scaled_basis(model, rule, N);
    const std::vector<double> mu = density_values(mu_density, rule);
    HermitianMatrix t(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k)
        for (int j = 0; j <= k; ++j) {
            Complex acc = 0.0;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) acc += mu[q] * e[k][q] * std::conj(e[j][q]);
            t(j, k) = acc;
            t(k, j) = std::conj(acc);
        }
    for (int k = 0; k < N; ++k) t(k, k) = t(k, k).real();
    return t;
}

double convex_trace(const SpectrumResult& spectrum, double theta) {
    if (!(theta > 0.0)) throw DomainError("convex_trace needs theta > 0");
    double acc = 0.0;
    for (double s : spectrum.s) acc += std::max(0.0, s - theta);
    return acc;
}

SchattenNorms schatten(const SpectrumResult& spectrum, double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("schatten needs finite p > 0");
    SchattenNorms out;
    double acc = 0.0;
    for (std::size_t n = 0; n < spectrum.s.size(); ++n) {
        acc += std::pow(spectrum.s[n], p);
        out.sp_weak = std::max(out.sp_weak, std::pow(1.0 + double(n), 1.0 / p) * spectrum.s[n]);
    }
    out.sp = std::pow(acc, 1.0 / p);
    return out;
}

void write_spectrum_csv(std::ostream& os, const SpectrumResult& spectrum) {
    os << "n,s_n\n";
    for (std::size_t n = 0; n < spectrum.s.size(); ++n) os << n << ',' << format_double(spectrum.s[n]) << '\n';
}

void write_spectrum_diagnostics(std::ostream& os, const SpectrumResult& spectrum) {
    os << "N=" << spectrum.N << '\n'
       << "M=" << spectrum.M_used << '\n'
       << "stability=" << format_double(spectrum.stability) << '\n'
       << "gram_min_eig=" << format_double(spectrum.gram_min_eig) << '\n';
}

} // namespace hankel_lab
