#ifndef HANKEL_LAB_SPECIAL_HPP
#define HANKEL_LAB_SPECIAL_HPP

namespace hankel_lab {

/// log Gamma(x) for x > 0. Reentrant (does not touch the global signgam).
double log_gamma(double x);

/// log n!
inline double log_factorial(int n) { return log_gamma(static_cast<double>(n) + 1.0); }

/// log of the Beta function B(a, b), a, b > 0.
double log_beta(double a, double b);

} // namespace hankel_lab

#endif
