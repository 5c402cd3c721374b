#ifndef HANKEL_LAB_SYMBOL_HPP
#define HANKEL_LAB_SYMBOL_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hankel_lab {

using Complex = std::complex<double>;
using Point = std::complex<double>;

/// f(z) = z^a conj(z)^b
struct Monomial {
    int a = 0;
    int b = 0;
};

/// Net angular frequencies present in the symbol: f(e^{it} z) has Fourier
/// modes only in [min, max].
struct AngularBand {
    int min = 0;
    int max = 0;
};

/// Rotation-covariant form f(z) = radial(|z|) * z^power, power in Z
/// (z^{-k} = 1/z^k). radial is real-valued and evaluated at r > 0 only.
struct Rotational {
    int power = 0;
    std::function<double(double)> radial;
};

/// Symbol of a Hankel operator. `eval` is authoritative; the optional
/// fields are structural metadata that enable closed-form paths and are
/// expected to agree with `eval`.
struct Symbol {
    std::string name;
    std::function<Complex(Point)> eval;
    std::optional<AngularBand> angular_band;
    std::optional<Monomial> monomial;
    std::optional<double> bounded;        // declared sup |f|
    std::optional<double> jump_radius;    // f jumps across |z| = r
    std::optional<Rotational> rotational;
    /// Present iff f is holomorphic; gives f'.
    std::function<Complex(Point)> derivative;

    Complex operator()(Point z) const { return eval(z); }
    bool is_holomorphic() const { return static_cast<bool>(derivative); }
};

Symbol constant_symbol(Complex c);
Symbol monomial_symbol(int a, int b);
/// Pointwise conjugate, with metadata transformed accordingly.
Symbol conjugate(const Symbol& f);
/// f - g, no metadata retained.
Symbol difference(const Symbol& f, const Symbol& g, std::string name);

/// Builtin catalog: const_1, conj_z, conj_z_sq, holo_z, holo_z_sq,
/// inv_z_outside (1/z for |z| >= 1, 0 inside), bounded_mix
/// (conj(z)/(1+|z|^2)), radial_bump (1/(1+|z|^2)), and "a,b" monomials.
/// Throws ConfigError for unknown names.
Symbol catalog_symbol(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace hankel_lab

#endif
