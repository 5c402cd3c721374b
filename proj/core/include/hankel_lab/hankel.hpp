#ifndef HANKEL_LAB_HANKEL_HPP
#define HANKEL_LAB_HANKEL_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "hankel_lab/linalg.hpp"
#include "hankel_lab/quadrature.hpp"
#include "hankel_lab/symbol.hpp"
#include "hankel_lab/weights.hpp"

namespace hankel_lab {

/// H_f restricted to span{e_0..e_{N-1}}, with the projection P_omega
/// truncated to span{e_0..e_{M-1}}.
struct GramSpec {
    WeightModel model = WeightModel::fock(1.0);
    Symbol f;
    int N = 0;
    int M = 0;
    /// Global rule for quadrature paths; built on demand when null.
    std::shared_ptr<const GlobalRule> rule;
};

/// N + max(0, highest angular mode) for banded symbols (f e_k, k < N, has no
/// modes above N - 1 + that), N + 16 otherwise.
int default_projection(const Symbol& f, int N);
GramSpec make_gram_spec(const WeightModel& model, const Symbol& f, int N, std::optional<int> M = std::nullopt);

/// Rule used by quadrature paths: global_rule defaults, split at the symbol's jump.
std::shared_ptr<const GlobalRule> default_global_rule(const WeightModel& model, const Symbol& f);

enum class GramPath { Monomial, Rotational, Quadrature };
GramPath gram_path(const Symbol& f);

/// <f e_k, e_j>: closed form for monomials and rotation-covariant symbols,
/// global quadrature otherwise.
Complex matrix_element(const WeightModel& model, const Symbol& f, int j, int k, const GlobalRule& rule);

/// <f e_k, e_j> by global quadrature only, with an error estimate from a rule
/// of half the order. flagged = error_estimate > 1e-9.
struct QuadratureElement {
    Complex value;
    double error_estimate = 0.0;
    bool flagged = false;
};
QuadratureElement matrix_element_quadrature(const WeightModel& model, const Symbol& f, int j, int k,
                                            const GlobalRule& rule);

/// G_jk = <H e_k, H e_j>. Monomials use closed-form moments, rotation-covariant
/// symbols a cancellation-free radial variance, everything else residual
/// vectors on the global rule.
HermitianMatrix gram_matrix(const GramSpec& spec);

struct SpectrumResult {
    std::vector<double> s;  // non-increasing
    double gram_min_eig = 0.0;
    int N = 0;
    int M_used = 0;
    double stability = 0.0;  // max |s_n(M) - s_n(M+8)|
};

/// Eigenvalues by cyclic Jacobi, clamped at 0, square-rooted, descending.
/// Throws NumericalError if the smallest eigenvalue is below -1e-8 max(1, ||G||_F).
SpectrumResult singular_values(const HermitianMatrix& gram);

/// Gram at M and at M + 8; fills M_used and stability.
SpectrumResult spectrum(const GramSpec& spec);

/// ||H_f k_z|| from the truncated Gram matrix. Throws DomainError when the
/// truncated kernel mass sum_{n<N} |e_n(z)|^2 / K(z,z) is below 0.999.
std::vector<double> berezin_profile(const GramSpec& spec, const std::vector<Point>& points);
std::vector<double> berezin_profile(const GramSpec& spec, const HermitianMatrix& gram,
                                    const std::vector<Point>& points);

/// int |g|^2 mu dA_omega for g = sum coeffs[n] e_n. Throws DomainError on a
/// negative density value at a node.
double toeplitz_form(const WeightModel& model, const Symbol& mu_density, const std::vector<Complex>& coeffs,
                     const GlobalRule& rule);

/// T_jk = int e_k conj(e_j) mu dA_omega, j, k < N.
HermitianMatrix toeplitz_gram(const WeightModel& model, const Symbol& mu_density, int N, const GlobalRule& rule);

/// sum_n (s_n - theta)^+
double convex_trace(const SpectrumResult& spectrum, double theta);

struct SchattenNorms {
    double sp = 0.0;       // (sum s_n^p)^{1/p}
    double sp_weak = 0.0;  // max_n (1+n)^{1/p} s_n
};
SchattenNorms schatten(const SpectrumResult& spectrum, double p);

/// CSV header n,s_n.
void write_spectrum_csv(std::ostream& os, const SpectrumResult& spectrum);
/// Lines N=..., M=..., stability=..., gram_min_eig=...
void write_spectrum_diagnostics(std::ostream& os, const SpectrumResult& spectrum);

} // namespace hankel_lab

#endif
