#ifndef HANKEL_LAB_QUADRATURE_HPP
#define HANKEL_LAB_QUADRATURE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "hankel_lab/symbol.hpp"
#include "hankel_lab/weights.hpp"

namespace hankel_lab {

/// Gauss rule on an interval. log_weights is kept alongside weights because
/// Laguerre weights underflow long before the nodes become useless.
struct GaussRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> log_weights;
};

/// Weight 1 on [-1, 1].
GaussRule1D gauss_legendre(int n);
/// Weight e^{-x} on [0, inf).
GaussRule1D gauss_laguerre(int n);
/// Weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1.
GaussRule1D gauss_jacobi(int n, double a, double b);

/// Tensor rule on the closed unit disk: Gauss-Legendre in s = r^2 times the
/// n_t-point trapezoid in theta. Weights sum to pi (plain area measure).
struct DiskRule {
    std::vector<Point> nodes;
    std::vector<double> weights;
    int n_r = 0;
    int n_t = 0;
    /// Gauss-Legendre on [0, 1] with n_r + 2 points, used per radial piece
    /// when a disk straddles a jump circle.
    std::vector<double> piece_nodes;
    std::vector<double> piece_weights;
};

DiskRule disk_rule(int n_r = 24, int n_t = 64);

/// Nodes u in the unit disk and area weights (summing to pi) for the disk
/// D(center, radius), i.e. w = center + radius * u. When jump_radius is
/// given and the circle |w| = jump_radius cuts the disk, every theta-ray is
/// split at the crossing(s) and integrated piecewise in rho; theta itself is
/// then split at the intersection and tangent directions, with n_t
/// Gauss-Legendre points per arc under a cosine substitution.
struct DiskNodes {
    std::vector<Point> u;
    std::vector<double> weights;
    bool split = false;
};

DiskNodes disk_nodes(const DiskRule& rule, Point center, double radius,
                     std::optional<double> jump_radius = std::nullopt);

/// Integral of f over D(center, radius) with respect to dA.
Complex integrate_disk(const Symbol& f, Point center, double radius, const DiskRule& rule);

/// Rule for radial integrals: int_Omega F(|z|^2) dA_omega = sum_i exp(log_weights[i]) F(s[i]).
/// With split_s set, the s-range is cut at split_s and each side gets its own
/// n-point rule, which keeps jumps of F at split_s from spoiling accuracy.
struct RadialRule {
    std::vector<double> s;
    std::vector<double> log_weights;
};

RadialRule radial_rule(const WeightModel& model, int n, std::optional<double> split_s = std::nullopt);

/// Polar rule for int_Omega F dA_omega: radial_rule x n_t-point trapezoid.
struct GlobalRule {
    WeightModel model;
    RadialRule radial;
    std::vector<Point> nodes;
    std::vector<double> weights;
    int n_r = 0;
    int n_t = 0;
};

GlobalRule global_rule(const WeightModel& model, int n_r = 96, int n_t = 128,
                       std::optional<double> split_radius = std::nullopt);

/// The split radius appropriate for f on the model, if any.
std::optional<double> split_radius_for(const Symbol& f, const WeightModel& model);

} // namespace hankel_lab

#endif
