#include "hankel_lab/weights.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hankel_lab/error.hpp"
#include "hankel_lab/special.hpp"

namespace hankel_lab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_inside(const WeightModel& model, Point z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(what) + ": non-finite point");
    if (!model.contains(z)) {
        std::ostringstream os;
        os << what << ": point (" << z.real() << ", " << z.imag() << ") outside " << model.describe();
        throw DomainError(os.str());
    }
}

} // namespace

WeightModel WeightModel::fock(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Fock weight needs alpha > 0");
    return WeightModel(WeightKind::StandardFock, alpha);
}

WeightModel WeightModel::bergman(double alpha) {
    if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("Bergman weight needs alpha > -1");
    return WeightModel(WeightKind::StandardBergman, alpha);
}

bool WeightModel::contains(Point z) const {
    if (is_fock()) return std::isfinite(std::abs(z));
    return std::norm(z) < 1.0;
}

std::string WeightModel::describe() const {
    std::ostringstream os;
    os << (is_fock() ? "fock:" : "bergman:") << alpha_;
    return os.str();
}

double WeightModel::tau0() const {
    return is_fock() ? std::sqrt(kPi / alpha_) : std::sqrt(kPi / (alpha_ + 1.0));
}

double weight(const WeightModel& model, Point z) {
    require_inside(model, z, "weight");
    const double r2 = std::norm(z);
    if (model.is_fock()) return std::exp(-model.alpha() * r2);
    return (model.alpha() + 1.0) / kPi * std::pow(1.0 - r2, model.alpha());
}

double tau(const WeightModel& model, Point z) {
    require_inside(model, z, "tau");
    if (model.is_fock()) return model.tau0();
    return model.tau0() * (1.0 - std::norm(z));
}

double lambda_density(const WeightModel& model, Point z) {
    const double t = tau(model, z);
    return 1.0 / (t * t);
}

Complex kernel(const WeightModel& model, Point z, Point w) {
    require_inside(model, z, "kernel");
    require_inside(model, w, "kernel");
    const Complex zw = z * std::conj(w);
    if (model.is_fock()) return model.alpha() / kPi * std::exp(model.alpha() * zw);
    if (std::abs(zw) >= 1.0) throw DomainError("kernel: |z conj(w)| >= 1");
    return std::pow(1.0 - zw, -(2.0 + model.alpha()));
}

double kernel_diagonal(const WeightModel& model, Point z) {
    require_inside(model, z, "kernel_diagonal");
    const double r2 = std::norm(z);
    if (model.is_fock()) return model.alpha() / kPi * std::exp(model.alpha() * r2);
    return std::pow(1.0 - r2, -(2.0 + model.alpha()));
}

double log_norm_sq(const WeightModel& model, int n) {
    if (n < 0) throw DomainError("log_norm_sq: negative index");
    const double a = model.alpha();
    if (model.is_fock())
        // pi n! / alpha^{n+1}
        return std::log(kPi) + log_factorial(n) - (n + 1.0) * std::log(a);
    // n! Gamma(alpha+2) / Gamma(n+alpha+2)
    return log_factorial(n) + log_gamma(a + 2.0) - log_gamma(n + a + 2.0);
}

BasisData basis(const WeightModel& model, int n) {
    if (n < 0) throw DomainError("basis: negative index");
    if (n > kBasisMaxIndex)
        throw NumericalError("basis: index above kBasisMaxIndex = 170; use log_norm_sq");
    const double lns = log_norm_sq(model, n);
    const double norm_sq = std::exp(lns);
    const double coeff = std::exp(-0.5 * lns);
    if (!std::isfinite(norm_sq) || !std::isfinite(coeff) || norm_sq == 0.0)
        throw NumericalError("basis: norm of z^n not representable");
    return {n, norm_sq, coeff};
}

Complex basis_value(const WeightModel& model, int n, Point z) {
    if (n == 0) return std::exp(-0.5 * log_norm_sq(model, 0));
    const double r = std::abs(z);
    if (r == 0.0) return 0.0;
    const double log_mod = n * std::log(r) - 0.5 * log_norm_sq(model, n);
    return std::polar(std::exp(log_mod), n * std::arg(z));
}

double lambda_of_disk(const WeightModel& model, double r) {
    if (r < 0.0) throw DomainError("lambda_of_disk: negative radius");
    if (model.is_fock()) return model.alpha() * r * r;  // (alpha/pi) * pi r^2
    if (r >= 1.0) throw DomainError("lambda_of_disk: radius >= 1 on the disk");
    const double r2 = r * r;
    return (model.alpha() + 1.0) * r2 / (1.0 - r2);
}

} // namespace hankel_lab
