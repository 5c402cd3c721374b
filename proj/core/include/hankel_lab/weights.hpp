#ifndef HANKEL_LAB_WEIGHTS_HPP
#define HANKEL_LAB_WEIGHTS_HPP

#include <complex>
#include <string>

namespace hankel_lab {

using Complex = std::complex<double>;
using Point = std::complex<double>;

enum class WeightKind { StandardFock, StandardBergman };
enum class Domain { Plane, UnitDisk };

/// Standard Fock weight e^{-alpha|z|^2} on C, or the probability Bergman
/// weight ((alpha+1)/pi)(1-|z|^2)^alpha on the unit disk.
class WeightModel {
public:
    static WeightModel fock(double alpha);
    static WeightModel bergman(double alpha);

    WeightKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    Domain domain() const { return kind_ == WeightKind::StandardFock ? Domain::Plane : Domain::UnitDisk; }
    bool is_fock() const { return kind_ == WeightKind::StandardFock; }

    /// Strictly inside the domain.
    bool contains(Point z) const;
    /// "fock:1", "bergman:0", ...
    std::string describe() const;

    /// tau at the origin; tau(z) = tau0 on C and tau0 (1 - |z|^2) on the disk.
    double tau0() const;

    friend bool operator==(const WeightModel&, const WeightModel&) = default;

private:
    WeightModel(WeightKind kind, double alpha) : kind_(kind), alpha_(alpha) {}
    WeightKind kind_;
    double alpha_;
};

/// Orthonormal monomial e_n = coeff * z^n of A^2_omega.
struct BasisData {
    int n;
    double norm_sq;  // ||z^n||^2
    double coeff;    // 1/sqrt(norm_sq)
};

/// Largest n for which basis() returns finite norm_sq/coeff for every model.
/// Internal code works with log_norm_sq and has no such limit.
inline constexpr int kBasisMaxIndex = 170;

/// omega(z)
double weight(const WeightModel& model, Point z);
double tau(const WeightModel& model, Point z);
/// Density of d lambda_omega = dA / tau^2.
double lambda_density(const WeightModel& model, Point z);
/// K(z, w), normalised so that <g, K_z> = g(z) in L^2(dA_omega).
Complex kernel(const WeightModel& model, Point z, Point w);
/// K(z, z) = ||K_z||^2.
double kernel_diagonal(const WeightModel& model, Point z);

/// log ||z^n||^2, valid for every n >= 0.
double log_norm_sq(const WeightModel& model, int n);
BasisData basis(const WeightModel& model, int n);
/// e_n(z), computed in the log domain.
Complex basis_value(const WeightModel& model, int n, Point z);

/// lambda_omega(D(0, r)); r < 1 on the disk.
double lambda_of_disk(const WeightModel& model, double r);

} // namespace hankel_lab

#endif
