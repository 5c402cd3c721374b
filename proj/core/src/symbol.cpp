#include "hankel_lab/symbol.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "hankel_lab/error.hpp"

namespace hankel_lab {

namespace {

Complex ipow(Complex z, int n) {
    Complex r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

} // namespace

Symbol constant_symbol(Complex c) {
    Symbol s;
    s.name = "constant";
    s.eval = [c](Point) { return c; };
    s.angular_band = AngularBand{0, 0};
    s.bounded = std::abs(c);
    s.derivative = [](Point) { return Complex(0.0); };
    if (c.imag() == 0.0) {
        const double re = c.real();
        s.rotational = Rotational{0, [re](double) { return re; }};
        if (re == 1.0) s.monomial = Monomial{0, 0};
    }
    return s;
}

Symbol monomial_symbol(int a, int b) {
    if (a < 0 || b < 0) throw ConfigError("monomial exponents must be non-negative");
    Symbol s;
    s.name = std::to_string(a) + "," + std::to_string(b);
    s.eval = [a, b](Point z) { return ipow(z, a) * ipow(std::conj(z), b); };
    s.monomial = Monomial{a, b};
    s.angular_band = AngularBand{a - b, a - b};
    s.rotational = Rotational{a - b, [b](double r) { return std::pow(r, 2 * b); }};
    if (a == 0 && b == 0) s.bounded = 1.0;
    if (b == 0) s.derivative = [a](Point z) { return a == 0 ? Complex(0.0) : double(a) * ipow(z, a - 1); };
    return s;
}

Symbol conjugate(const Symbol& f) {
    Symbol s;
    s.name = "conj(" + f.name + ")";
    auto inner = f.eval;
    s.eval = [inner](Point z) { return std::conj(inner(z)); };
    if (f.angular_band) s.angular_band = AngularBand{-f.angular_band->max, -f.angular_band->min};
    if (f.monomial) s.monomial = Monomial{f.monomial->b, f.monomial->a};
    s.bounded = f.bounded;
    s.jump_radius = f.jump_radius;
    if (f.rotational) {
        // conj(Q(r) z^d) = Q(r) conj(z)^d = Q(r) r^{2d} z^{-d}
        const int d = f.rotational->power;
        auto q = f.rotational->radial;
        s.rotational = Rotational{-d, [q, d](double r) { return q(r) * std::pow(r, 2 * d); }};
    }
    // conjugates of non-constant holomorphic functions are not holomorphic
    if (f.is_holomorphic() && f.angular_band && f.angular_band->min == 0 && f.angular_band->max == 0)
        s.derivative = [](Point) { return Complex(0.0); };
    return s;
}

Symbol difference(const Symbol& f, const Symbol& g, std::string name) {
    Symbol s;
    s.name = std::move(name);
    auto fe = f.eval;
    auto ge = g.eval;
    s.eval = [fe, ge](Point z) { return fe(z) - ge(z); };
    return s;
}

Symbol catalog_symbol(const std::string& name) {
    if (name == "const_1") {
        Symbol s = constant_symbol(1.0);
        s.name = name;
        return s;
    }
    if (name == "conj_z" || name == "conj_z_sq" || name == "holo_z" || name == "holo_z_sq") {
        const bool conj = name.starts_with("conj");
        const int deg = name.ends_with("_sq") ? 2 : 1;
        Symbol s = conj ? monomial_symbol(0, deg) : monomial_symbol(deg, 0);
        s.name = name;
        return s;
    }
    if (name == "inv_z_outside") {
        Symbol s;
        s.name = name;
        s.eval = [](Point z) { return std::norm(z) >= 1.0 ? 1.0 / z : Complex(0.0); };
        s.angular_band = AngularBand{-1, -1};
        s.bounded = 1.0;
        s.jump_radius = 1.0;
        s.rotational = Rotational{-1, [](double r) { return r >= 1.0 ? 1.0 : 0.0; }};
        return s;
    }
    if (name == "bounded_mix") {
        Symbol s;
        s.name = name;
        s.eval = [](Point z) { return std::conj(z) / (1.0 + std::norm(z)); };
        s.angular_band = AngularBand{-1, -1};
        s.bounded = 0.5;
        s.rotational = Rotational{-1, [](double r) { return r * r / (1.0 + r * r); }};
        return s;
    }
    if (name == "radial_bump") {
        Symbol s;
        s.name = name;
        s.eval = [](Point z) { return Complex(1.0 / (1.0 + std::norm(z))); };
        s.angular_band = AngularBand{0, 0};
        s.bounded = 1.0;
        s.rotational = Rotational{0, [](double r) { return 1.0 / (1.0 + r * r); }};
        return s;
    }
    // "a,b" monomial
    const auto comma = name.find(',');
    if (comma != std::string::npos) {
        int a = -1, b = -1;
        const char* first = name.data();
        const char* mid = first + comma;
        const char* last = first + name.size();
        auto ra = std::from_chars(first, mid, a);
        auto rb = std::from_chars(mid + 1, last, b);
        if (ra.ec == std::errc() && ra.ptr == mid && rb.ec == std::errc() && rb.ptr == last && a >= 0 &&
            b >= 0)
            return monomial_symbol(a, b);
    }
    throw ConfigError("unknown symbol '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"const_1", "conj_z", "conj_z_sq", "holo_z", "holo_z_sq", "inv_z_outside", "bounded_mix",
            "radial_bump"};
}

} // namespace hankel_lab
