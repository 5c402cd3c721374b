#include "hankel_lab/special.hpp"

#include <cmath>

namespace hankel_lab {

double log_gamma(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double log_beta(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

} // namespace hankel_lab
