#include "hankel_lab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hankel_lab/error.hpp"
#include "hankel_lab/linalg.hpp"
#include "hankel_lab/special.hpp"

namespace hankel_lab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRescale = 1e150;
const double kLogRescale = std::log(kRescale);

// Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}, with
// b_0 unused and mu0 = int w.
struct Recurrence {
    std::vector<double> a;  // n entries
    std::vector<double> b;  // n + 1 entries
    double log_mu0 = 0.0;
};

struct Evaluation {
    double p = 0.0;       // orthonormal p_n(x), scaled by exp(-log_scale)
    double dp = 0.0;      // derivative, same scaling
    double sum_sq = 0.0;  // sum_{k<n} p_k(x)^2, scaled by exp(-2 log_scale)
    double log_scale = 0.0;
};

Evaluation evaluate(const Recurrence& rec, int n, double x) {
    Evaluation e;
    double prev = 0.0, dprev = 0.0;
    double cur = std::exp(-0.5 * rec.log_mu0), dcur = 0.0;
    for (int k = 0; k < n; ++k) {
        e.sum_sq += cur * cur;
        const double sb_next = std::sqrt(rec.b[k + 1]);
        const double sb = k > 0 ? std::sqrt(rec.b[k]) : 0.0;
        const double next = ((x - rec.a[k]) * cur - sb * prev) / sb_next;
        const double dnext = (cur + (x - rec.a[k]) * dcur - sb * dprev) / sb_next;
        prev = cur;
        dprev = dcur;
        cur = next;
        dcur = dnext;
        if (std::abs(cur) > kRescale || std::abs(dcur) > kRescale) {
            prev /= kRescale;
            dprev /= kRescale;
            cur /= kRescale;
            dcur /= kRescale;
            e.sum_sq /= kRescale * kRescale;
            e.log_scale += kLogRescale;
        }
    }
    e.p = cur;
    e.dp = dcur;
    return e;
}

GaussRule1D gauss_from_recurrence(const Recurrence& rec, int n) {
    std::vector<double> diag(rec.a.begin(), rec.a.begin() + n);
    std::vector<double> off;
    for (int k = 1; k < n; ++k) off.push_back(std::sqrt(rec.b[k]));
    std::vector<double> x = tridiagonal_eigenvalues(diag, off);

    GaussRule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.log_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double xi = x[i];
        for (int it = 0; it < 3; ++it) {
            const Evaluation e = evaluate(rec, n, xi);
            if (e.dp == 0.0) break;
            const double step = e.p / e.dp;
            if (!std::isfinite(step)) break;
            xi -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(xi))) break;
        }
        const Evaluation e = evaluate(rec, n, xi);
        rule.nodes[i] = xi;
        rule.log_weights[i] = -(std::log(e.sum_sq) + 2.0 * e.log_scale);
        rule.weights[i] = std::exp(rule.log_weights[i]);
    }
    return rule;
}

void require_order(int n) {
    if (n < 1) throw DomainError("Gauss rule needs n >= 1");
}

} // namespace

GaussRule1D gauss_legendre(int n) {
    require_order(n);
    Recurrence rec;
    rec.a.assign(n, 0.0);
    rec.b.assign(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) rec.b[k] = double(k) * k / (4.0 * k * k - 1.0);
    rec.log_mu0 = std::log(2.0);
    return gauss_from_recurrence(rec, n);
}

GaussRule1D gauss_laguerre(int n) {
    require_order(n);
    Recurrence rec;
    rec.a.resize(n);
    rec.b.assign(n + 1, 0.0);
    for (int k = 0; k < n; ++k) rec.a[k] = 2.0 * k + 1.0;
    for (int k = 1; k <= n; ++k) rec.b[k] = double(k) * k;
    rec.log_mu0 = 0.0;
    return gauss_from_recurrence(rec, n);
}

GaussRule1D gauss_jacobi(int n, double a, double b) {
    require_order(n);
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("Gauss-Jacobi needs a, b > -1");
    Recurrence rec;
    rec.a.resize(n);
    rec.b.assign(n + 1, 0.0);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * k + ab;
        rec.a[k] = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (t * (t + 2.0));
    }
    for (int k = 1; k <= n; ++k) {
        const double t = 2.0 * k + ab;
        if (k == 1)
            rec.b[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            rec.b[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    rec.log_mu0 = (ab + 1.0) * std::log(2.0) + log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(ab + 2.0);
    return gauss_from_recurrence(rec, n);
}

DiskRule disk_rule(int n_r, int n_t) {
    if (n_r < 1) throw DomainError("disk_rule needs n_r >= 1");
    if (n_t < 3) throw DomainError("disk_rule needs n_t >= 3");
    DiskRule rule;
    rule.n_r = n_r;
    rule.n_t = n_t;
    const GaussRule1D gl = gauss_legendre(n_r);
    rule.nodes.reserve(std::size_t(n_r) * n_t);
    rule.weights.reserve(std::size_t(n_r) * n_t);
    for (int i = 0; i < n_r; ++i) {
        const double s = 0.5 * (1.0 + gl.nodes[i]);
        const double r = std::sqrt(s);
        const double w = kPi * 0.5 * gl.weights[i] / n_t;
        for (int j = 0; j < n_t; ++j) {
            const double theta = 2.0 * kPi * j / n_t;
            rule.nodes.push_back(std::polar(r, theta));
            rule.weights.push_back(w);
        }
    }
    const GaussRule1D piece = gauss_legendre(n_r + 2);
    for (int i = 0; i < n_r + 2; ++i) {
        rule.piece_nodes.push_back(0.5 * (1.0 + piece.nodes[i]));
        rule.piece_weights.push_back(0.5 * piece.weights[i]);
    }
    return rule;
}

DiskNodes disk_nodes(const DiskRule& rule, Point center, double radius, std::optional<double> jump_radius) {
    if (!(radius > 0.0)) throw DomainError("disk radius must be positive");
    const double dist = std::abs(center);
    const bool straddles = jump_radius && dist - radius < *jump_radius && *jump_radius < dist + radius;
    DiskNodes out;
    if (!straddles) {
        out.u = rule.nodes;
        out.weights = rule.weights;
        return out;
    }
    out.split = true;
    const double r0 = *jump_radius;
    // Ray angles (seen from the center) where the ray integral loses
    // smoothness: the two circle intersections and, for an outside center,
    // the tangent directions. Between them theta = a + (b - a)(1 - cos(pi t))/2
    // absorbs the square-root behaviour at the ends.
    std::vector<std::pair<double, double>> rays;  // (theta, weight)
    std::vector<double> crit;
    if (dist > 1e-14 * radius) {
        const double phi = std::arg(center);
        const double x = (dist * dist + r0 * r0 - radius * radius) / (2.0 * dist);
        const double y = std::sqrt(std::max(0.0, r0 * r0 - x * x));
        for (double sy : {y, -y}) crit.push_back(std::arg(std::polar(1.0, phi) * Point(x, sy) - center));
        if (dist > r0) {
            const double half = std::asin(r0 / dist);
            crit.push_back(phi + kPi + half);
            crit.push_back(phi + kPi - half);
        }
    }
    if (crit.empty()) {
        for (int j = 0; j < rule.n_t; ++j) rays.emplace_back(2.0 * kPi * j / rule.n_t, 2.0 * kPi / rule.n_t);
    } else {
        for (double& t : crit) t -= 2.0 * kPi * std::floor(t / (2.0 * kPi));
        std::sort(crit.begin(), crit.end());
        crit.push_back(crit.front() + 2.0 * kPi);
        const GaussRule1D gl = gauss_legendre(std::max(16, rule.n_t));
        for (std::size_t k = 0; k + 1 < crit.size(); ++k) {
            const double a = crit[k], len = crit[k + 1] - crit[k];
            if (len <= 0.0) continue;
            for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
                const double t = 0.5 * (1.0 + gl.nodes[i]);
                rays.emplace_back(a + 0.5 * len * (1.0 - std::cos(kPi * t)),
                                  0.5 * gl.weights[i] * 0.5 * len * kPi * std::sin(kPi * t));
            }
        }
    }
    for (const auto& [theta, dtheta] : rays) {
        const Point e = std::polar(1.0, theta);
        // |center + rho e|^2 = r0^2, rho in (0, radius)
        const double b = (std::conj(center) * e).real();
        const double c = std::norm(center) - r0 * r0;
        std::vector<double> cuts{0.0};
        const double disc = b * b - c;
        if (disc > 0.0) {
            const double sq = std::sqrt(disc);
            for (double rho : {-b - sq, -b + sq})
                if (rho > 0.0 && rho < radius) cuts.push_back(rho / radius);
        }
        cuts.push_back(1.0);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
            const double lo = cuts[p], len = cuts[p + 1] - cuts[p];
            if (len <= 0.0) continue;
            for (std::size_t i = 0; i < rule.piece_nodes.size(); ++i) {
                const double rho = lo + len * rule.piece_nodes[i];
                out.u.push_back(rho * e);
                out.weights.push_back(len * rule.piece_weights[i] * rho * dtheta);
            }
        }
    }
    return out;
}

Complex integrate_disk(const Symbol& f, Point center, double radius, const DiskRule& rule) {
    const DiskNodes nodes = disk_nodes(rule, center, radius, f.jump_radius);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < nodes.u.size(); ++i) sum += nodes.weights[i] * f(center + radius * nodes.u[i]);
    return sum * radius * radius;
}

RadialRule radial_rule(const WeightModel& model, int n, std::optional<double> split_s) {
    require_order(n);
    RadialRule out;
    const double alpha = model.alpha();
    if (model.is_fock()) {
        // int F(|z|^2) e^{-alpha|z|^2} dA = (pi/alpha) int_0^inf F(t/alpha) e^{-t} dt
        const double log_pref = std::log(kPi / alpha);
        const GaussRule1D lag = gauss_laguerre(n);
        if (split_s && *split_s > 0.0) {
            const double t0 = alpha * *split_s;
            const GaussRule1D gl = gauss_legendre(n);
            for (int i = 0; i < n; ++i) {
                const double t = 0.5 * t0 * (1.0 + gl.nodes[i]);
                out.s.push_back(t / alpha);
                out.log_weights.push_back(log_pref + std::log(0.5 * t0) + gl.log_weights[i] - t);
            }
            for (int i = 0; i < n; ++i) {
                out.s.push_back((t0 + lag.nodes[i]) / alpha);
                out.log_weights.push_back(log_pref + lag.log_weights[i] - t0);
            }
        } else {
            for (int i = 0; i < n; ++i) {
                out.s.push_back(lag.nodes[i] / alpha);
                out.log_weights.push_back(log_pref + lag.log_weights[i]);
            }
        }
        return out;
    }
    // (alpha+1) int_0^1 F(s) (1-s)^alpha ds
    const double log_pref = std::log(alpha + 1.0);
    const GaussRule1D gj = gauss_jacobi(n, alpha, 0.0);
    if (split_s && *split_s > 0.0 && *split_s < 1.0) {
        const double s0 = *split_s;
        const GaussRule1D gl = gauss_legendre(n);
        for (int i = 0; i < n; ++i) {
            const double s = 0.5 * s0 * (1.0 + gl.nodes[i]);
            out.s.push_back(s);
            out.log_weights.push_back(log_pref + std::log(0.5 * s0) + gl.log_weights[i] +
                                      alpha * std::log1p(-s));
        }
        // s = s0 + (1-s0) sigma, sigma = (1+x)/2
        for (int i = 0; i < n; ++i) {
            const double sigma = 0.5 * (1.0 + gj.nodes[i]);
            out.s.push_back(s0 + (1.0 - s0) * sigma);
            out.log_weights.push_back(log_pref + (alpha + 1.0) * std::log1p(-s0) -
                                      (alpha + 1.0) * std::log(2.0) + gj.log_weights[i]);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            out.s.push_back(0.5 * (1.0 + gj.nodes[i]));
            out.log_weights.push_back(log_pref - (alpha + 1.0) * std::log(2.0) + gj.log_weights[i]);
        }
    }
    return out;
}

GlobalRule global_rule(const WeightModel& model, int n_r, int n_t, std::optional<double> split_radius) {
    if (n_r < 1) throw DomainError("global_rule needs n_r >= 1");
    if (n_t < 3) throw DomainError("global_rule needs n_t >= 3");
    std::optional<double> split_s;
    if (split_radius) split_s = *split_radius * *split_radius;
    GlobalRule rule{model, radial_rule(model, n_r, split_s), {}, {}, n_r, n_t};
    const std::size_t nr = rule.radial.s.size();
    rule.nodes.reserve(nr * n_t);
    rule.weights.reserve(nr * n_t);
    for (std::size_t i = 0; i < nr; ++i) {
        const double r = std::sqrt(rule.radial.s[i]);
        const double w = std::exp(rule.radial.log_weights[i]) / n_t;
        for (int j = 0; j < n_t; ++j) {
            rule.nodes.push_back(std::polar(r, 2.0 * kPi * j / n_t));
            rule.weights.push_back(w);
        }
    }
    return rule;
}

std::optional<double> split_radius_for(const Symbol& f, const WeightModel& model) {
    if (!f.jump_radius) return std::nullopt;
    const double r = *f.jump_radius;
    if (!(r > 0.0)) return std::nullopt;
    if (!model.is_fock() && r >= 1.0) return std::nullopt;
    return r;
}

} // namespace hankel_lab
