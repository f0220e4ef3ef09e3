#pragma once

#include <cmath>

namespace gwe {

// log(n choose k); n >= k >= 0
inline double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Beta(a,b) density at u in (0,1), via logs so large shapes stay finite
inline double beta_pdf(double a, double b, double u) {
    double lg = (a - 1.0) * std::log(u) + (b - 1.0) * std::log1p(-u) - log_beta(a, b);
    return std::exp(lg);
}

}  // namespace gwe
